// deltagraph: recognise delta-graphs, build orthogonal representations and
// report minimum semidefinite rank bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "deltagraph/commands.hpp"

namespace
{

std::string slurp(const std::string& path)
{
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("GRAPH_SEED"))
        return std::stoull(s);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace deltagraph;

    CLI::App app{"Delta-graph recognition and orthogonal representation certificates"};
    app.require_subcommand(1);

    std::string input;
    std::string mode_name = "strict";
    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const std::exception&) {
        std::cerr << "error: GRAPH_SEED is not an integer\n";
        return cli::exit_input_error;
    }

    cli::RecognizeOptions rec;
    auto* recognize = app.add_subcommand("recognize", "find a delta (or C-delta) labeling");
    recognize->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->default_val("-");
    recognize->add_flag("--c-delta", rec.c_delta, "recognise the complement form");
    recognize->add_option("--mode", mode_name, "strict | relaxed")->check(CLI::IsMember({"strict", "relaxed"}));

    cli::CertifyOptions cert;
    auto* certify = app.add_subcommand("certify", "certificate, representation and bound for a delta-graph");
    certify->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->default_val("-");
    certify->add_option("--seed", seed, "sampler seed (default: $GRAPH_SEED or 0)");
    certify->add_flag("--emit-gram", cert.emit_gram, "include the exact Gram matrix");
    certify->add_flag("--gram-decimal", cert.gram_decimal, "emit the Gram matrix as lossy decimal text");
    certify->add_flag("--complement", cert.complement_input, "certify the complement of the input");
    certify->add_option("--mode", mode_name, "strict | relaxed")->check(CLI::IsMember({"strict", "relaxed"}));

    auto* verify = app.add_subcommand("verify", "re-check a certify bundle");
    verify->add_option("bundle", input, "bundle JSON file, '-' for stdin")->default_val("-");

    auto* bounds = app.add_subcommand("bounds", "msr interval with provenance");
    bounds->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->default_val("-");
    bounds->add_option("--seed", seed, "sampler seed (default: $GRAPH_SEED or 0)");

    auto* batch = app.add_subcommand("batch", "conjecture report per graph6 line on stdin");
    batch->add_option("--seed", seed, "sampler seed (default: $GRAPH_SEED or 0)");

    std::string family;
    std::vector<std::size_t> sizes;
    bool complement_out = false;
    auto* generate = app.add_subcommand("generate", "emit a named family member as graph6");
    generate->add_option("family", family, "path|cycle|complete|star|mobius|kp|corona|robertson")->required();
    generate->add_option("sizes", sizes, "size parameters");
    generate->add_flag("--complement", complement_out, "emit the complement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_input_error;
    }

    try {
        rec.mode = cert.mode = parse_mode(mode_name);
        cert.seed = seed;
        if (*recognize)
            return cli::cmd_recognize(slurp(input), rec, std::cout, std::cerr);
        if (*certify)
            return cli::cmd_certify(slurp(input), cert, std::cout, std::cerr);
        if (*verify)
            return cli::cmd_verify(slurp(input), std::cout, std::cerr);
        if (*bounds)
            return cli::cmd_bounds(slurp(input), seed, std::cout, std::cerr);
        if (*batch)
            return cli::cmd_batch(std::cin, seed, std::cout);
        if (*generate)
            return cli::cmd_generate(family, sizes, complement_out, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_input_error;
    }
    return cli::exit_input_error;
}
