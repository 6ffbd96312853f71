#ifndef DELTAGRAPH_GENERATORS_HPP
#define DELTAGRAPH_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace deltagraph::gen
{

inline Graph path(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
}

inline Graph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}

inline Graph complete(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return from_edge_list(n, e);
}

/// K_{1,n}: centre 0, leaves 1..n.
inline Graph star(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("star needs n >= 1 leaves");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= n; ++i)
        e.emplace_back(0, i);
    return from_edge_list(n + 1, e);
}

/// Vertex (a, b) is a * |h| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h)
{
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<Edge> e;
    for (Vertex a = 0; a < ng; ++a)
        for (Vertex b = 0; b < nh; ++b) {
            const Vertex self = a * nh + b;
            for (Vertex d = b + 1; d < nh; ++d)
                if (h.has_edge(b, d))
                    e.emplace_back(self, a * nh + d);
            for (Vertex c = a + 1; c < ng; ++c)
                if (g.has_edge(a, c))
                    e.emplace_back(self, c * nh + b);
        }
    return from_edge_list(ng * nh, e);
}

/// Cycle on k vertices plus the k/2 antipodal chords.
inline Graph mobius_ladder(std::size_t k)
{
    if (k < 6 || k % 2 != 0)
        throw std::invalid_argument("mobius ladder needs an even vertex count >= 6");
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    for (Vertex i = 0; i < k / 2; ++i)
        e.emplace_back(i, i + k / 2);
    return from_edge_list(k, e);
}

/// g with one copy of h per vertex; vertex i of g is joined to all of copy
/// i, which occupies ids |g| + i*|h| .. |g| + (i+1)*|h| - 1.
inline Graph corona(const Graph& g, const Graph& h)
{
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<Edge> e = g.edges();
    for (Vertex i = 0; i < ng; ++i) {
        const Vertex base = ng + i * nh;
        for (const auto& [a, b] : h.edges())
            e.emplace_back(base + a, base + b);
        for (Vertex j = 0; j < nh; ++j)
            e.emplace_back(i, base + j);
    }
    return from_edge_list(ng + ng * nh, e);
}

namespace detail
{
// Hamiltonian cycle 0..18 plus chord i -> i + s_i with
// s = [8,4,7,4,8,5,7,4,7,8,4,5,7,8,4,8,4,8,4].
inline constexpr std::array<std::array<std::uint8_t, 2>, 38> robertson_edges{{
    {0, 1},   {0, 8},   {0, 12},  {0, 18},  {1, 2},   {1, 5},   {1, 16},  {2, 3},   {2, 9},   {2, 13},
    {3, 4},   {3, 7},   {3, 18},  {4, 5},   {4, 12},  {4, 15},  {5, 6},   {5, 10},  {6, 7},   {6, 13},
    {6, 17},  {7, 8},   {7, 11},  {8, 9},   {8, 15},  {9, 10},  {9, 17},  {10, 11}, {10, 14}, {11, 12},
    {11, 16}, {12, 13}, {13, 14}, {14, 15}, {14, 18}, {15, 16}, {16, 17}, {17, 18},
}};

/// FNV-1a over the endpoint bytes.
constexpr std::uint64_t edge_table_checksum()
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& e : robertson_edges)
        for (auto b : e) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    return h;
}

static_assert(edge_table_checksum() == 0xc3125baca49ee3ebULL, "Robertson edge table corrupted");
} // namespace detail

/// The Robertson graph, the unique (4,5)-cage: 19 vertices, 38 edges.
inline Graph robertson_cage()
{
    std::vector<Edge> e;
    for (const auto& [u, v] : detail::robertson_edges)
        e.emplace_back(u, v);
    return from_edge_list(19, e);
}

} // namespace deltagraph::gen

#endif // DELTAGRAPH_GENERATORS_HPP
