#ifndef DELTAGRAPH_MSR_HPP
#define DELTAGRAPH_MSR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blocks.hpp"
#include "chordal.hpp"
#include "delta.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "ortho_rep.hpp"

namespace deltagraph
{

/// Exact rules of the recursive engine, in the order it tries them.
enum class MsrRule
{
    tree,
    cycle,
    chordal_cc,
    pendant,
    cut_vertex
};

inline std::string_view to_string(MsrRule r)
{
    switch (r) {
    case MsrRule::tree: return "tree";
    case MsrRule::cycle: return "cycle";
    case MsrRule::chordal_cc: return "chordal-cc";
    case MsrRule::pendant: return "pendant-reduction";
    case MsrRule::cut_vertex: return "cut-vertex-sum";
    }
    throw std::logic_error("unknown rule");
}

/// Minimum number of cliques covering every edge, greedily along a perfect
/// elimination ordering: a vertex with an uncovered edge to a later
/// neighbour takes the clique formed by itself and all later neighbours.
/// Optimal on chordal graphs. Isolated vertices need no clique.
inline std::size_t clique_cover_number_chordal(const Graph& g, const EliminationOrdering& peo)
{
    if (!is_perfect_elimination_ordering(g, peo))
        throw std::invalid_argument("clique cover: ordering is not a perfect elimination ordering");
    const std::size_t n = g.order();
    std::vector<VertexSet> covered(n, VertexSet(n));
    VertexSet later = g.full_set();
    std::size_t count = 0;
    for (Vertex v : peo.order) {
        later.reset(v);
        const VertexSet ahead = g.neighbors(v) & later;
        if ((ahead - covered[v]).none())
            continue;
        ++count;
        VertexSet clique = ahead;
        clique.set(v);
        for (Vertex a = clique.find_first(); a != VertexSet::npos; a = clique.find_next(a))
            covered[a] |= clique;
    }
    return count;
}

namespace detail
{
inline void require_connected(const Graph& g, const char* what)
{
    if (!is_connected(g))
        throw std::invalid_argument(std::string(what) + ": graph must be connected");
}
} // namespace detail

inline std::optional<std::size_t> msr_exact(const Graph& g);

/// Applies one rule at the top level and lets the full engine resolve the
/// pieces it produces. Absent when the rule does not apply or a piece is
/// out of reach of the engine.
inline std::optional<std::size_t> msr_via(const Graph& g, MsrRule rule)
{
    detail::require_connected(g, "msr_via");
    switch (rule) {
    case MsrRule::tree:
        if (is_tree(g))
            return g.order() - 1;
        return std::nullopt;
    case MsrRule::cycle:
        if (is_cycle(g))
            return g.order() - 2;
        return std::nullopt;
    case MsrRule::chordal_cc:
        if (auto peo = chordality(g))
            return clique_cover_number_chordal(g, *peo);
        return std::nullopt;
    case MsrRule::pendant: {
        const auto v = find_pendant(g);
        if (!v)
            return std::nullopt;
        const auto rest = msr_exact(remove_vertex(g, *v));
        if (!rest)
            return std::nullopt;
        return *rest + 1;
    }
    case MsrRule::cut_vertex: {
        const BlockDecomposition bd = blocks(g);
        if (bd.cut_vertices.empty())
            return std::nullopt;
        std::size_t sum = 0;
        for (const auto& b : bd.blocks) {
            const auto part = msr_exact(induced_subgraph(g, b));
            if (!part)
                return std::nullopt;
            sum += *part;
        }
        return sum;
    }
    }
    throw std::logic_error("unknown rule");
}

/// First rule (in engine order) that resolves g, with its value.
inline std::optional<std::pair<MsrRule, std::size_t>> msr_exact_with_rule(const Graph& g)
{
    for (MsrRule r : {MsrRule::tree, MsrRule::cycle, MsrRule::chordal_cc, MsrRule::pendant, MsrRule::cut_vertex})
        if (auto v = msr_via(g, r))
            return std::pair{r, *v};
    return std::nullopt;
}

/// Exact minimum semidefinite rank for the graphs the rule engine covers
/// (trees, cycles, chordal graphs, and anything those reach through pendant
/// removal and block sums). Throws std::invalid_argument when disconnected.
inline std::optional<std::size_t> msr_exact(const Graph& g)
{
    if (auto r = msr_exact_with_rule(g))
        return r->second;
    return std::nullopt;
}

struct BoundSource
{
    std::string rule;
    /// "lower", "upper" or "exact".
    std::string side;
    std::size_t value = 0;

    friend bool operator==(const BoundSource&, const BoundSource&) = default;
};

struct MsrBounds
{
    std::size_t order = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::vector<BoundSource> provenance;

    bool exact() const { return lo == hi; }
    /// lo > hi means two proven bounds disagree; reported, never hidden.
    bool consistent() const { return lo <= hi; }
    /// Maximum positive semidefinite nullity, by rank-nullity.
    std::size_t nullity_lo() const { return order - hi; }
    std::size_t nullity_hi() const { return order - lo; }
};

/// Tightest interval from the trivial bounds, the exact engine and, given a
/// delta-form certificate, the dimension of a verified construction.
inline MsrBounds msr_bounds(const Graph& g, const std::optional<DeltaCertificate>& cert = std::nullopt,
                            std::uint64_t seed = 0)
{
    detail::require_connected(g, "msr_bounds");
    const std::size_t n = g.order();
    MsrBounds b;
    b.order = n;
    b.lo = 0;
    b.hi = n - 1;
    b.provenance.push_back({"trivial", "upper", n - 1});
    if (g.edge_count() > 0) {
        b.lo = 1;
        b.provenance.push_back({"trivial", "lower", 1});
    } else {
        b.provenance.push_back({"trivial", "lower", 0});
    }

    if (auto exact = msr_exact_with_rule(g)) {
        b.lo = std::max(b.lo, exact->second);
        b.hi = std::min(b.hi, exact->second);
        b.provenance.push_back({std::string(to_string(exact->first)), "exact", exact->second});
    }
    if (cert) {
        GenericSampler sampler(seed);
        const OrthoRep rep = construct(g, *cert, sampler);
        if (verify_rep(g, rep).ok()) {
            b.hi = std::min(b.hi, rep.dim);
            b.provenance.push_back({"delta-construction", "upper", rep.dim});
        }
    }
    return b;
}

enum class Verdict
{
    holds,
    holds_by_construction,
    unresolved
};

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_by_construction: return "holds-by-construction";
    case Verdict::unresolved: return "unresolved";
    }
    throw std::logic_error("unknown verdict");
}

struct ConjectureReport
{
    std::string graph_id;
    std::size_t order = 0;
    std::size_t min_degree = 0;
    std::size_t delta_bound = 0;
    std::size_t certified_hi = 0;
    Verdict verdict = Verdict::unresolved;
    std::optional<std::size_t> msr;
    std::optional<DeltaCertificate> certificate;
};

/// Delta Conjecture check for one connected graph: a verified construction
/// from a delta labeling, else the exact engine, else unresolved.
inline ConjectureReport check_delta_conjecture(const Graph& g, std::uint64_t seed = 0)
{
    detail::require_connected(g, "check_delta_conjecture");
    ConjectureReport r;
    r.graph_id = to_graph6(g);
    r.order = g.order();
    r.min_degree = min_degree(g);
    r.delta_bound = r.order - r.min_degree;
    r.msr = msr_exact(g);
    r.certified_hi = r.msr.value_or(r.order - 1);

    if (auto cert = recognize_delta(g, Mode::strict)) {
        GenericSampler sampler(seed);
        const OrthoRep rep = construct(g, *cert, sampler);
        if (verify_rep(g, rep).ok()) {
            r.certified_hi = std::min(r.certified_hi, rep.dim);
            r.verdict = Verdict::holds_by_construction;
            r.certificate = std::move(cert);
            return r;
        }
    }
    if (r.msr && *r.msr <= r.delta_bound)
        r.verdict = Verdict::holds;
    return r;
}

} // namespace deltagraph

#endif // DELTAGRAPH_MSR_HPP
