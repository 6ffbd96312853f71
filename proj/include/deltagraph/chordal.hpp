#ifndef DELTAGRAPH_CHORDAL_HPP
#define DELTAGRAPH_CHORDAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace deltagraph
{

struct EliminationOrdering
{
    std::vector<Vertex> order;
};

/// Lexicographic BFS by partition refinement, starting at vertex 0 and
/// preferring lower ids inside a cell. O(n^2).
inline std::vector<Vertex> lex_bfs(const Graph& g)
{
    std::vector<std::vector<Vertex>> cells(1);
    for (Vertex v = 0; v < g.order(); ++v)
        cells.front().push_back(v);

    std::vector<Vertex> visit;
    visit.reserve(g.order());
    while (!cells.empty()) {
        const Vertex v = cells.front().front();
        cells.front().erase(cells.front().begin());
        if (cells.front().empty())
            cells.erase(cells.begin());
        visit.push_back(v);

        std::vector<std::vector<Vertex>> refined;
        refined.reserve(cells.size() * 2);
        for (auto& cell : cells) {
            std::vector<Vertex> in, out;
            for (Vertex w : cell)
                (g.has_edge(v, w) ? in : out).push_back(w);
            if (!in.empty())
                refined.push_back(std::move(in));
            if (!out.empty())
                refined.push_back(std::move(out));
        }
        cells = std::move(refined);
    }
    return visit;
}

/// True when `order` is a permutation of V(g) and every vertex's later
/// neighbours form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& peo)
{
    const std::size_t n = g.order();
    if (peo.order.size() != n)
        return false;
    VertexSet later = g.full_set();
    VertexSet seen(n);
    for (Vertex v : peo.order) {
        if (v >= n || seen.test(v))
            return false;
        seen.set(v);
    }
    for (Vertex v : peo.order) {
        later.reset(v);
        if (!is_clique(g, g.neighbors(v) & later))
            return false;
    }
    return true;
}

/// Perfect elimination ordering (reverse Lex-BFS) if g is chordal.
inline std::optional<EliminationOrdering> chordality(const Graph& g)
{
    EliminationOrdering peo{lex_bfs(g)};
    std::reverse(peo.order.begin(), peo.order.end());
    if (!is_perfect_elimination_ordering(g, peo))
        return std::nullopt;
    return peo;
}

inline bool is_chordal(const Graph& g) { return chordality(g).has_value(); }

} // namespace deltagraph

#endif // DELTAGRAPH_CHORDAL_HPP
