#ifndef DELTAGRAPH_COMMANDS_HPP
#define DELTAGRAPH_COMMANDS_HPP

#include <cstdint>
#include <exception>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"
#include "graph_io.hpp"
#include "json_io.hpp"
#include "msr.hpp"

// Command bodies behind the deltagraph executable. Each takes its input as
// text or a stream and writes to the given streams, returning the process
// exit code.
namespace deltagraph::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_negative = 1,
    exit_input_error = 2,
    exit_internal = 3,
};

struct RecognizeOptions
{
    bool c_delta = false;
    Mode mode = Mode::strict;
};

inline int cmd_recognize(std::string_view input, const RecognizeOptions& opt, std::ostream& out, std::ostream& err)
{
    std::optional<Graph> g;
    try {
        g = parse_graph_text(input);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    const auto cert = opt.c_delta ? recognize_c_delta(*g, opt.mode) : recognize_delta(*g, opt.mode);
    if (!cert) {
        out << "absent\n";
        return exit_negative;
    }
    Json j = to_json(*cert);
    if (opt.mode == Mode::relaxed)
        j["note"] = "relaxed-mode certificate; not necessarily a delta-graph labeling";
    out << j.dump(2) << '\n';
    return exit_ok;
}

struct CertifyOptions
{
    std::uint64_t seed = 0;
    bool emit_gram = false;
    bool gram_decimal = false;
    /// Certify complement(input) instead of the input itself.
    bool complement_input = false;
    Mode mode = Mode::strict;
};

/// Bundle: graph, certificate, representation, verification report, bound,
/// and optionally the Gram matrix.
inline int cmd_certify(std::string_view input, const CertifyOptions& opt, std::ostream& out, std::ostream& err)
{
    std::optional<Graph> parsed;
    try {
        parsed = parse_graph_text(input);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    const Graph g = opt.complement_input ? complement(*parsed) : *parsed;
    const auto cert = recognize_delta(g, opt.mode);
    if (!cert) {
        err << "error: graph is not a delta-graph; no certificate to build on\n";
        return exit_negative;
    }
    try {
        GenericSampler sampler(opt.seed);
        const OrthoRep rep = construct(g, *cert, sampler);
        const RepReport report = verify_rep(g, rep);
        Json j{{"graph", to_graph6(g)},
               {"seed", opt.seed},
               {"certificate", to_json(*cert)},
               {"representation", to_json(rep)},
               {"report", to_json(report)},
               {"bound", g.order() - min_degree(g)}};
        if (opt.mode == Mode::relaxed)
            j["note"] = "relaxed-mode certificate; not necessarily a delta-graph labeling";
        if (opt.emit_gram) {
            const GramMatrix gm = gram(rep);
            if (opt.gram_decimal)
                j["gram_decimal"] = to_decimal_text(gm);
            else
                j["gram"] = to_json(gm);
        }
        out << j.dump(2) << '\n';
        return report.ok() ? exit_ok : exit_internal;
    } catch (const RetryExhausted& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

/// Re-checks a certify bundle: representation against its graph, and the
/// certificate when present.
inline int cmd_verify(std::string_view bundle_text, std::ostream& out, std::ostream& err)
{
    try {
        const Json j = Json::parse(bundle_text);
        const Graph g = parse_graph6(j.at("graph").get<std::string>());
        const OrthoRep rep = rep_from_json(j.at("representation"));
        const RepReport report = verify_rep(g, rep);
        Json result{{"report", to_json(report)}};
        bool ok = report.ok();
        if (j.contains("certificate")) {
            const auto check = check_certificate(g, certificate_from_json(j.at("certificate")));
            result["certificate_valid"] = check.valid;
            if (!check.valid)
                result["certificate_error"] = check.reason;
            ok = ok && check.valid;
        }
        if (j.contains("gram")) {
            const bool same = matrix_from_json(j.at("gram")) == gram(rep).entries;
            result["gram_matches"] = same;
            ok = ok && same;
        }
        out << result.dump(2) << '\n';
        return ok ? exit_ok : exit_negative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

inline int cmd_bounds(std::string_view input, std::uint64_t seed, std::ostream& out, std::ostream& err)
{
    try {
        const Graph g = parse_graph_text(input);
        const auto cert = is_connected(g) ? recognize_delta(g) : std::nullopt;
        out << to_json(msr_bounds(g, cert, seed)).dump(2) << '\n';
        return exit_ok;
    } catch (const RetryExhausted& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

/// One ConjectureReport line per non-blank input line, in input order.
/// Failures are reported inline and do not stop the stream.
inline int cmd_batch(std::istream& in, std::uint64_t seed, std::ostream& out)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = detail::trim(line);
        if (text.empty())
            continue;
        Json j;
        try {
            j = to_json(check_delta_conjecture(parse_graph6(text), seed));
        } catch (const std::exception& e) {
            j = Json{{"line", lineno}, {"input", std::string(text)}, {"error", e.what()}};
        }
        out << j.dump() << '\n';
    }
    return exit_ok;
}

/// Families: path N, cycle N, complete N, star N, mobius K, kp N M
/// (K_N box P_M), corona N M (S_N corona P_M), robertson.
inline int cmd_generate(const std::string& family, const std::vector<std::size_t>& args, bool complement_output,
                        std::ostream& out, std::ostream& err)
{
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument(family + " takes " + std::to_string(k) + " size argument(s)");
    };
    try {
        std::optional<Graph> g;
        if (family == "path") {
            need(1);
            g = gen::path(args[0]);
        } else if (family == "cycle") {
            need(1);
            g = gen::cycle(args[0]);
        } else if (family == "complete") {
            need(1);
            g = gen::complete(args[0]);
        } else if (family == "star") {
            need(1);
            g = gen::star(args[0]);
        } else if (family == "mobius") {
            need(1);
            g = gen::mobius_ladder(args[0]);
        } else if (family == "kp") {
            need(2);
            g = gen::cartesian_product(gen::complete(args[0]), gen::path(args[1]));
        } else if (family == "corona") {
            need(2);
            g = gen::corona(gen::star(args[0]), gen::path(args[1]));
        } else if (family == "robertson") {
            need(0);
            g = gen::robertson_cage();
        } else {
            throw std::invalid_argument("unknown family '" + family + "'");
        }
        out << to_graph6(complement_output ? complement(*g) : *g) << '\n';
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace deltagraph::cli

#endif // DELTAGRAPH_COMMANDS_HPP
