#ifndef DELTAGRAPH_BLOCKS_HPP
#define DELTAGRAPH_BLOCKS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace deltagraph
{

struct BlockDecomposition
{
    /// Each block as a sorted vertex list: a maximal 2-connected piece, a
    /// bridge, or the lone vertex of K1.
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
};

/// Hopcroft-Tarjan biconnected components, iterative. Throws
/// std::invalid_argument for a disconnected graph.
inline BlockDecomposition blocks(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("block decomposition requires a connected graph");
    const std::size_t n = g.order();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back({0});
        return out;
    }

    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<Vertex> parent(n, unvisited);
    std::vector<Edge> edge_stack;
    struct Frame
    {
        Vertex v;
        Vertex last;
    };
    std::vector<Frame> frames;
    std::size_t clock = 0;

    disc[0] = low[0] = clock++;
    frames.push_back({0, VertexSet::npos});
    while (!frames.empty()) {
        const Vertex v = frames.back().v;
        const Vertex last = frames.back().last;
        const Vertex w = last == VertexSet::npos ? g.neighbors(v).find_first() : g.neighbors(v).find_next(last);
        if (w == VertexSet::npos) {
            frames.pop_back();
            if (frames.empty())
                break;
            const Vertex u = frames.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                VertexSet members(n);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    members.set(e.first);
                    members.set(e.second);
                    if (e == Edge{u, v})
                        break;
                }
                std::vector<Vertex> block;
                for (Vertex x = members.find_first(); x != VertexSet::npos; x = members.find_next(x))
                    block.push_back(x);
                out.blocks.push_back(std::move(block));
            }
            continue;
        }
        frames.back().last = w;
        if (disc[w] == unvisited) {
            parent[w] = v;
            disc[w] = low[w] = clock++;
            edge_stack.emplace_back(v, w);
            frames.push_back({w, VertexSet::npos});
        } else if (w != parent[v] && disc[w] < disc[v]) {
            edge_stack.emplace_back(v, w);
            low[v] = std::min(low[v], disc[w]);
        }
    }

    std::vector<std::size_t> membership(n, 0);
    for (const auto& b : out.blocks)
        for (Vertex x : b)
            ++membership[x];
    for (Vertex x = 0; x < n; ++x)
        if (membership[x] > 1)
            out.cut_vertices.push_back(x);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

} // namespace deltagraph

#endif // DELTAGRAPH_BLOCKS_HPP
