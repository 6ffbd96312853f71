#ifndef DELTAGRAPH_GRAPH_IO_HPP
#define DELTAGRAPH_GRAPH_IO_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace deltagraph
{

class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail
{
inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

constexpr int g6_bias = 63;
constexpr int g6_max = 126;
} // namespace detail

/// Decodes one graph6 string (optional ">>graph6<<" header, surrounding
/// whitespace ignored).
inline Graph parse_graph6(std::string_view text)
{
    using detail::g6_bias;
    using detail::g6_max;
    text = detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError("graph6: empty input");
    for (char c : text) {
        const int b = static_cast<unsigned char>(c);
        if (b < g6_bias || b > g6_max)
            throw ParseError("graph6: byte " + std::to_string(b) + " outside printable range 63..126");
    }

    auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - g6_bias); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (text.size() >= 2 && byte(1) == 63) {
        if (text.size() < 8)
            throw ParseError("graph6: truncated 8-byte size header");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | byte(i);
        pos = 8;
    } else {
        if (text.size() < 4)
            throw ParseError("graph6: truncated 4-byte size header");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | byte(i);
        pos = 4;
    }
    if (n == 0)
        throw ParseError("graph6: zero-vertex graph is not supported");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw ParseError("graph6: payload has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(expected));

    std::vector<VertexSet> rows(n, VertexSet(n));
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            if ((byte(pos + k / 6) >> (5 - k % 6)) & 1U) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    for (; k < expected * 6; ++k)
        if ((byte(pos + k / 6) >> (5 - k % 6)) & 1U)
            throw ParseError("graph6: nonzero padding bits");
    return Graph(std::move(rows));
}

inline std::string to_graph6(const Graph& g)
{
    using detail::g6_bias;
    const std::uint64_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + g6_bias));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + g6_bias));
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + g6_bias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + g6_bias));
    return out;
}

/// Plain edge-list text: first line n, then one "u v" pair per line.
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        std::istringstream ls{std::string(t)};
        if (!n) {
            long long v = -1;
            std::string rest;
            if (!(ls >> v) || (ls >> rest) || v <= 0)
                throw ParseError("edge list line " + std::to_string(lineno) + ": expected a positive vertex count");
            n = static_cast<std::size_t>(v);
            continue;
        }
        long long u = -1, v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0)
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected two vertex ids");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!n)
        throw ParseError("edge list: missing vertex count");
    try {
        return from_edge_list(*n, edges);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

/// Accepts either format: a leading line of digits selects edge-list text,
/// anything else is read as a single graph6 string.
inline Graph parse_graph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (std::isdigit(static_cast<unsigned char>(t.front())))
            return parse_edge_list(text);
        return parse_graph6(t);
    }
    throw ParseError("no graph found in input");
}

} // namespace deltagraph

#endif // DELTAGRAPH_GRAPH_IO_HPP
