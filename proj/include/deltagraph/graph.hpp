#ifndef DELTAGRAPH_GRAPH_HPP
#define DELTAGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace deltagraph
{

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set {0..n-1}.
///
/// Each vertex owns a bitset row of its neighbours. Values are immutable once
/// built; every operation in the library is a free function returning a new
/// graph.
class Graph
{
public:
    /// Builds from symmetric adjacency rows. Throws std::invalid_argument on
    /// an empty vertex set, ragged rows, loops or asymmetry.
    explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows))
    {
        const std::size_t n = rows_.size();
        if (n == 0)
            throw std::invalid_argument("graph must have at least one vertex");
        for (Vertex v = 0; v < n; ++v) {
            if (rows_[v].size() != n)
                throw std::invalid_argument("adjacency row " + std::to_string(v) + " has wrong length");
            if (rows_[v].test(v))
                throw std::invalid_argument("loop at vertex " + std::to_string(v));
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = rows_[u].find_first(); v != VertexSet::npos; v = rows_[u].find_next(v))
                if (!rows_[v].test(u))
                    throw std::invalid_argument("adjacency is not symmetric");
    }

    std::size_t order() const { return rows_.size(); }

    bool has_edge(Vertex u, Vertex v) const { return rows_.at(u).test(v); }

    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }

    std::size_t degree(Vertex v) const { return rows_.at(v).count(); }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto& r : rows_)
            twice += r.count();
        return twice / 2;
    }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v))
                out.emplace_back(u, v);
        return out;
    }

    VertexSet empty_set() const { return VertexSet(order()); }

    VertexSet full_set() const
    {
        VertexSet s(order());
        s.set();
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
};

/// Graph on n vertices with the given edges; duplicates collapse.
inline Graph from_edge_list(std::size_t n, std::span<const Edge> edges)
{
    if (n == 0)
        throw std::invalid_argument("graph must have at least one vertex");
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph(std::move(rows));
}

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges)
{
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<VertexSet> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        rows[v] = ~g.neighbors(v);
        rows[v].reset(v);
    }
    return Graph(std::move(rows));
}

/// Vertices reachable from `start` inside the vertex subset `within`.
inline VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within)
{
    VertexSet seen(g.order());
    if (!within.test(start))
        return seen;
    VertexSet frontier(g.order());
    frontier.set(start);
    seen.set(start);
    while (frontier.any()) {
        VertexSet next(g.order());
        for (Vertex v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
            next |= g.neighbors(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

inline bool is_connected(const Graph& g)
{
    return reachable(g, 0, g.full_set()).all();
}

inline std::size_t component_count(const Graph& g)
{
    VertexSet left = g.full_set();
    std::size_t count = 0;
    while (left.any()) {
        left -= reachable(g, left.find_first(), left);
        ++count;
    }
    return count;
}

/// Subgraph induced on `vs`; vertex vs[i] becomes vertex i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs)
{
    if (vs.empty())
        throw std::invalid_argument("induced subgraph needs at least one vertex");
    const std::size_t k = vs.size();
    VertexSet seen(g.order());
    for (Vertex v : vs) {
        if (v >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (seen.test(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
        seen.set(v);
    }
    std::vector<VertexSet> rows(k, VertexSet(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.has_edge(vs[i], vs[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
    return Graph(std::move(rows));
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Vertex> vs)
{
    return induced_subgraph(g, std::span<const Vertex>(vs.begin(), vs.size()));
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& vs)
{
    std::vector<Vertex> list;
    for (Vertex v = vs.find_first(); v != VertexSet::npos; v = vs.find_next(v))
        list.push_back(v);
    return induced_subgraph(g, list);
}

/// G - v. Requires n >= 2.
inline Graph remove_vertex(const Graph& g, Vertex v)
{
    VertexSet keep = g.full_set();
    keep.reset(v);
    return induced_subgraph(g, keep);
}

inline std::size_t min_degree(const Graph& g)
{
    std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

inline std::size_t max_degree(const Graph& g)
{
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

/// Lowest-indexed degree-1 vertex.
inline std::optional<Vertex> find_pendant(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            return v;
    return std::nullopt;
}

inline bool is_tree(const Graph& g)
{
    return g.edge_count() + 1 == g.order() && is_connected(g);
}

/// Connected and 2-regular, n >= 3.
inline bool is_cycle(const Graph& g)
{
    if (g.order() < 3)
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

inline bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        VertexSet others = s;
        others.reset(v);
        if (!others.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

} // namespace deltagraph

#endif // DELTAGRAPH_GRAPH_HPP
