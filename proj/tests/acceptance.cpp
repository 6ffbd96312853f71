// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "deltagraph/deltagraph.hpp"
#include "oracles.hpp"

using namespace deltagraph;

namespace
{

struct Outcome
{
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

std::vector<Graph> admissible_atlas()
{
    std::vector<Graph> out;
    for (const Graph& g : oracle::load_atlas())
        if (g.order() >= 4 && oracle::connected(g) && oracle::co_connected(g))
            out.push_back(g);
    return out;
}

Outcome cycles()
{
    Outcome o;
    for (std::size_t n = 6; n <= 10; ++n) {
        const Graph c = gen::cycle(n);
        const auto cert = recognize_c_delta(c);
        if (!cert) {
            o.fail("C" + std::to_string(n) + " not recognised");
            continue;
        }
        const Graph co = complement(c);
        GenericSampler s(0);
        const OrthoRep rep = construct(co, flip_form(*cert), s);
        const RepReport r = verify_rep(co, rep);
        if (!r.ok() || rep.dim != 3 || r.certified_bound != std::optional<std::size_t>{3} ||
            co.order() - min_degree(co) != 3)
            o.fail("C" + std::to_string(n) + " representation");
    }
    o.detail += o.ok ? "C6..C10 complements certified in dimension 3" : "";
    return o;
}

Outcome msr_formulas()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int i = 0; i < 50; ++i) {
        const Graph t = oracle::random_tree(size(rng), rng);
        if (msr_exact(t) != t.order() - 1)
            o.fail("tree " + to_graph6(t));
    }
    for (std::size_t n = 3; n <= 12; ++n)
        if (msr_exact(gen::cycle(n)) != n - 2)
            o.fail("cycle " + std::to_string(n));
    std::size_t chordal = 0;
    for (const Graph& g : oracle::load_atlas()) {
        if (!oracle::connected(g) || oracle::has_long_induced_cycle(g))
            continue;
        ++chordal;
        if (msr_exact(g) != oracle::edge_clique_cover(g))
            o.fail("chordal " + to_graph6(g));
    }
    if (o.ok)
        o.detail = "50 trees, 10 cycles, " + std::to_string(chordal) + " connected chordal graphs";
    return o;
}

Outcome recognition(const std::vector<Graph>& atlas, std::vector<std::pair<Graph, DeltaCertificate>>& found)
{
    Outcome o;
    for (const Graph& g : atlas)
        for (Mode mode : {Mode::strict, Mode::relaxed}) {
            const auto fast = recognize_delta(g, mode);
            const auto slow = brute_force_recognize(g, mode);
            if (fast.has_value() != slow.has_value())
                o.fail("presence differs on " + to_graph6(g));
            if (fast && !verify_certificate(g, *fast))
                o.fail("invalid certificate on " + to_graph6(g));
            if (fast && mode == Mode::strict)
                found.emplace_back(g, *fast);
        }
    if (o.ok)
        o.detail = std::to_string(atlas.size()) + " graphs, " + std::to_string(found.size()) + " delta-graphs";
    return o;
}

Outcome construction(const std::vector<std::pair<Graph, DeltaCertificate>>& found)
{
    Outcome o;
    std::size_t runs = 0;
    for (const auto& [g, cert] : found)
        for (std::uint64_t seed = 0; seed <= 4; ++seed) {
            ++runs;
            try {
                GenericSampler s(seed);
                const RepReport r = verify_rep(g, construct(g, cert, s));
                if (!r.ok() || r.certified_bound != g.order() - min_degree(g))
                    o.fail("verification failed on " + to_graph6(g));
            } catch (const RetryExhausted&) {
                o.fail("retry budget exceeded on " + to_graph6(g) + " seed " + std::to_string(seed));
            }
        }
    if (o.ok)
        o.detail = std::to_string(runs) + " constructions verified";
    if (found.empty())
        o.fail("no delta-graphs to construct");
    return o;
}

Outcome robertson()
{
    Outcome o;
    const Graph r = gen::robertson_cage();
    if (r.order() != 19 || min_degree(r) != 4 || max_degree(r) != 4 || oracle::girth(r) != std::optional<std::size_t>{5})
        o.fail("cage parameters");
    const auto cert = recognize_c_delta(r);
    if (!cert) {
        o.fail("not recognised as C-delta");
        return o;
    }
    const Graph co = complement(r);
    GenericSampler s(0);
    const OrthoRep rep = construct(co, flip_form(*cert), s);
    const RepReport rr = verify_rep(co, rep);
    if (!rr.ok() || rep.dim != 5 || rr.certified_bound != std::optional<std::size_t>{5})
        o.fail("complement representation");
    if (o.ok)
        o.detail = "complement certified in dimension 5 = 19 - 14";
    return o;
}

Outcome sweep()
{
    Outcome o;
    std::string text;
    std::size_t graphs = 0;
    for (const Graph& g : oracle::load_atlas())
        if (g.order() <= 6 && oracle::connected(g)) {
            text += to_graph6(g) + "\n";
            ++graphs;
        }
    std::istringstream in(text);
    std::ostringstream out;
    cli::cmd_batch(in, 0, out);
    std::istringstream lines(out.str());
    std::size_t resolved = 0, seen = 0;
    for (std::string l; std::getline(lines, l); ++seen) {
        const Json j = Json::parse(l);
        if (j.contains("error")) {
            o.fail("batch error: " + l);
            continue;
        }
        if (j.at("verdict") == "unresolved")
            continue;
        ++resolved;
        if (j.at("certified_hi").get<std::size_t>() > j.at("delta_bound").get<std::size_t>())
            o.fail("bound exceeded on " + j.at("graph").get<std::string>());
    }
    if (seen != graphs)
        o.fail("report count mismatch");
    if (o.ok)
        o.detail = std::to_string(graphs) + " graphs, " + std::to_string(resolved) + " resolved, none above bound";
    return o;
}

Outcome determinism()
{
    Outcome o;
    const std::string prism = to_graph6(complement(gen::cycle(6)));
    cli::CertifyOptions opt;
    opt.seed = 7;
    opt.emit_gram = true;
    std::ostringstream a, b, err;
    const int ca = cli::cmd_certify(prism, opt, a, err);
    const int cb = cli::cmd_certify(prism, opt, b, err);
    if (ca != 0 || cb != 0)
        o.fail("certify failed");
    else if (a.str() != b.str())
        o.fail("bundles differ");
    else
        o.detail = std::to_string(a.str().size()) + " identical bytes";
    return o;
}

bool report(int id, const char* name, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s)
        o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
    std::printf("%s %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", id, name, s, o.detail.c_str());
    std::fflush(stdout);
    return o.ok;
}

} // namespace

int main()
{
    const std::vector<Graph> atlas = admissible_atlas();
    std::vector<std::pair<Graph, DeltaCertificate>> found;
    bool all = true;
    all &= report(1, "cycle family", 1, cycles);
    all &= report(2, "msr formulas", 30, msr_formulas);
    all &= report(3, "recognition vs brute force", 300, [&] { return recognition(atlas, found); });
    all &= report(4, "construction totality", 0, [&] { return construction(found); });
    all &= report(5, "Robertson cage", 10, robertson);
    all &= report(6, "small-graph conjecture sweep", 60, sweep);
    all &= report(7, "certify determinism", 0, determinism);
    return all ? 0 : 1;
}
