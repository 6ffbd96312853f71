#ifndef DELTAGRAPH_DELTA_HPP
#define DELTAGRAPH_DELTA_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace deltagraph
{

/// Which bound applies to the odd positions of an ordering. Relaxed mode
/// accepts orderings that still admit the vector construction but are not
/// necessarily delta-graph labelings.
enum class Mode
{
    strict,
    relaxed
};

/// Base triple. The first two belong to the delta form (counts are
/// non-neighbours among priors), the last two to the complement form
/// (counts are neighbours among priors).
enum class BaseKind
{
    three_k1,
    k2_plus_k1,
    k3,
    p3
};

enum class CertificateForm
{
    delta,
    c_delta
};

inline CertificateForm form_of(BaseKind k)
{
    return (k == BaseKind::three_k1 || k == BaseKind::k2_plus_k1) ? CertificateForm::delta : CertificateForm::c_delta;
}

inline BaseKind complement_kind(BaseKind k)
{
    switch (k) {
    case BaseKind::three_k1: return BaseKind::k3;
    case BaseKind::k2_plus_k1: return BaseKind::p3;
    case BaseKind::k3: return BaseKind::three_k1;
    case BaseKind::p3: return BaseKind::k2_plus_k1;
    }
    throw std::logic_error("unknown base kind");
}

inline std::string_view to_string(BaseKind k)
{
    switch (k) {
    case BaseKind::three_k1: return "3K1";
    case BaseKind::k2_plus_k1: return "K2+K1";
    case BaseKind::k3: return "K3";
    case BaseKind::p3: return "P3";
    }
    throw std::logic_error("unknown base kind");
}

inline std::string_view to_string(Mode m) { return m == Mode::strict ? "strict" : "relaxed"; }

inline BaseKind parse_base_kind(std::string_view s)
{
    if (s == "3K1")
        return BaseKind::three_k1;
    if (s == "K2+K1")
        return BaseKind::k2_plus_k1;
    if (s == "K3")
        return BaseKind::k3;
    if (s == "P3")
        return BaseKind::p3;
    throw std::invalid_argument("unknown base kind '" + std::string(s) + "'");
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "strict")
        return Mode::strict;
    if (s == "relaxed")
        return Mode::relaxed;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

/// An ordering v1..vn witnessing membership. excluded_counts[m - 4] is the
/// count t_m for position m (1-based) >= 4.
struct DeltaCertificate
{
    std::vector<Vertex> ordering;
    BaseKind base_kind = BaseKind::three_k1;
    std::vector<std::size_t> excluded_counts;
    Mode mode = Mode::strict;

    CertificateForm form() const { return form_of(base_kind); }

    friend bool operator==(const DeltaCertificate&, const DeltaCertificate&) = default;
};

/// Largest admissible t_m at 1-based position m >= 4.
///   strict:  floor(m/2) - 1
///   relaxed: floor(m/2) - 1 for even m, floor((m-1)/2) - 1 for odd m
inline std::size_t max_excluded(std::size_t m, Mode mode)
{
    if (m < 4)
        throw std::invalid_argument("excluded-count bound is defined for positions m >= 4");
    if (mode == Mode::relaxed && m % 2 == 1)
        return (m - 1) / 2 - 1;
    return m / 2 - 1;
}

struct CertificateCheck
{
    bool valid = false;
    /// First 1-based position whose count breaks the bound or disagrees with
    /// the recorded value.
    std::optional<std::size_t> first_violation;
    std::string reason;

    explicit operator bool() const { return valid; }
};

namespace detail
{
inline std::size_t edges_among(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    return std::size_t{g.has_edge(a, b)} + std::size_t{g.has_edge(a, c)} + std::size_t{g.has_edge(b, c)};
}

/// Delta-form base kind of a triple, if it is one.
inline std::optional<BaseKind> delta_base(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    switch (edges_among(g, a, b, c)) {
    case 0: return BaseKind::three_k1;
    case 1: return BaseKind::k2_plus_k1;
    default: return std::nullopt;
    }
}

/// Puts the vertex isolated within the K2+K1 triple in the middle slot, so
/// that v1 ~ v3 and v2 is alone.
inline void normalize_base(const Graph& g, std::vector<Vertex>& ordering)
{
    auto& o = ordering;
    if (!g.has_edge(o[0], o[1]) && !g.has_edge(o[0], o[2]) && !g.has_edge(o[1], o[2]))
        return;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vertex v = o[i];
        const Vertex x = o[(i + 1) % 3];
        const Vertex y = o[(i + 2) % 3];
        if (!g.has_edge(v, x) && !g.has_edge(v, y)) {
            o[0] = std::min(x, y);
            o[1] = v;
            o[2] = std::max(x, y);
            return;
        }
    }
}

inline std::vector<std::size_t> count_misses(const Graph& g, std::span<const Vertex> ordering)
{
    std::vector<std::size_t> counts;
    VertexSet placed(g.order());
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (i >= 3)
            counts.push_back((placed - g.neighbors(ordering[i])).count());
        placed.set(ordering[i]);
    }
    return counts;
}
} // namespace detail

/// Full check of a certificate against g, in whichever form it carries.
inline CertificateCheck check_certificate(const Graph& g, const DeltaCertificate& cert)
{
    CertificateCheck out;
    const std::size_t n = g.order();
    if (n < 4) {
        out.reason = "graph has fewer than 4 vertices";
        return out;
    }
    if (cert.ordering.size() != n) {
        out.reason = "ordering length differs from vertex count";
        return out;
    }
    VertexSet seen(n);
    for (Vertex v : cert.ordering) {
        if (v >= n || seen.test(v)) {
            out.reason = "ordering is not a permutation of the vertices";
            return out;
        }
        seen.set(v);
    }
    const Graph co = complement(g);
    if (!is_connected(g) || !is_connected(co)) {
        out.reason = "graph and complement must both be connected";
        return out;
    }

    // The complement form on g is the delta form on complement(g).
    const bool c_form = cert.form() == CertificateForm::c_delta;
    const Graph& h = c_form ? co : g;
    const BaseKind want = c_form ? complement_kind(cert.base_kind) : cert.base_kind;
    const auto base = detail::delta_base(h, cert.ordering[0], cert.ordering[1], cert.ordering[2]);
    if (!base || *base != want) {
        out.reason = "first three vertices do not induce " + std::string(to_string(cert.base_kind));
        return out;
    }
    if (cert.excluded_counts.size() != n - 3) {
        out.reason = "excluded_counts must have one entry per position m >= 4";
        return out;
    }
    const auto actual = detail::count_misses(h, cert.ordering);
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const std::size_t m = i + 4;
        if (actual[i] != cert.excluded_counts[i]) {
            out.first_violation = m;
            out.reason = "recorded count at m=" + std::to_string(m) + " is " + std::to_string(cert.excluded_counts[i]) +
                         ", actual " + std::to_string(actual[i]);
            return out;
        }
        if (actual[i] > max_excluded(m, cert.mode)) {
            out.first_violation = m;
            out.reason = "count " + std::to_string(actual[i]) + " at m=" + std::to_string(m) + " exceeds bound " +
                         std::to_string(max_excluded(m, cert.mode));
            return out;
        }
    }
    out.valid = true;
    return out;
}

inline bool verify_certificate(const Graph& g, const DeltaCertificate& cert)
{
    return check_certificate(g, cert).valid;
}

/// Re-labels a certificate for g as the equivalent one for complement(g).
/// The ordering and counts are unchanged; only the base kind flips.
inline DeltaCertificate flip_form(DeltaCertificate cert)
{
    cert.base_kind = complement_kind(cert.base_kind);
    return cert;
}

namespace detail
{
class DeltaSearch
{
public:
    DeltaSearch(const Graph& g, Mode mode) : g_(g), mode_(mode), n_(g.order()), final_bound_(max_excluded(n_, mode))
    {
    }

    std::optional<std::vector<Vertex>> run()
    {
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b)
                for (Vertex c = b + 1; c < n_; ++c) {
                    if (!delta_base(g_, a, b, c))
                        continue;
                    order_ = {a, b, c};
                    VertexSet placed(n_);
                    placed.set(a);
                    placed.set(b);
                    placed.set(c);
                    if (extend(placed))
                        return order_;
                }
        return std::nullopt;
    }

private:
    bool extend(VertexSet& placed)
    {
        const std::size_t m = order_.size() + 1;
        if (m > n_)
            return true;
        if (dead_.contains(placed))
            return false;

        const std::size_t limit = max_excluded(m, mode_);
        std::vector<std::pair<std::size_t, Vertex>> candidates;
        bool hopeless = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (placed.test(v))
                continue;
            const std::size_t t = (placed - g_.neighbors(v)).count();
            // Counts never decrease as the prefix grows, so a vertex already
            // past the loosest remaining bound can never be placed.
            if (t > final_bound_) {
                hopeless = true;
                break;
            }
            if (t <= limit)
                candidates.emplace_back(t, v);
        }
        if (!hopeless) {
            std::sort(candidates.begin(), candidates.end());
            for (const auto& [t, v] : candidates) {
                placed.set(v);
                order_.push_back(v);
                if (extend(placed))
                    return true;
                order_.pop_back();
                placed.reset(v);
            }
        }
        dead_.insert(placed);
        return false;
    }

    const Graph& g_;
    Mode mode_;
    std::size_t n_;
    std::size_t final_bound_;
    std::vector<Vertex> order_;
    std::set<VertexSet> dead_;
};

inline bool admits_definition(const Graph& g)
{
    return g.order() >= 4 && is_connected(g) && is_connected(complement(g));
}

inline DeltaCertificate make_certificate(const Graph& g, std::vector<Vertex> ordering, Mode mode)
{
    normalize_base(g, ordering);
    DeltaCertificate cert;
    cert.base_kind = *delta_base(g, ordering[0], ordering[1], ordering[2]);
    cert.excluded_counts = count_misses(g, ordering);
    cert.ordering = std::move(ordering);
    cert.mode = mode;
    return cert;
}
} // namespace detail

/// Searches for a delta-graph labeling of g.
///
/// Seed triples with at most one edge are tried in lexicographic order; each
/// is extended one position at a time, most constrained candidate first
/// (fewest prior non-neighbours, then lowest id), backtracking on dead ends.
/// Prefixes proven unextendable are memoised by vertex set, since
/// extendability depends only on which vertices are placed. Complete, with
/// exponential worst case.
inline std::optional<DeltaCertificate> recognize_delta(const Graph& g, Mode mode = Mode::strict)
{
    if (!detail::admits_definition(g))
        return std::nullopt;
    auto ordering = detail::DeltaSearch(g, mode).run();
    if (!ordering)
        return std::nullopt;
    return detail::make_certificate(g, std::move(*ordering), mode);
}

/// Complement-form recognition: a delta labeling of complement(g), reported
/// with base kind K3 or P3.
inline std::optional<DeltaCertificate> recognize_c_delta(const Graph& g, Mode mode = Mode::strict)
{
    auto cert = recognize_delta(complement(g), mode);
    if (!cert)
        return std::nullopt;
    return flip_form(std::move(*cert));
}

/// Exhaustive test oracle: tries every permutation in lexicographic order
/// and returns the first delta labeling. Only for n <= 9.
inline std::optional<DeltaCertificate> brute_force_recognize(const Graph& g, Mode mode = Mode::strict)
{
    const std::size_t n = g.order();
    if (n > 9)
        throw std::invalid_argument("brute-force recognition is limited to n <= 9");
    if (!detail::admits_definition(g))
        return std::nullopt;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        const std::size_t base_edges = detail::edges_among(g, perm[0], perm[1], perm[2]);
        if (base_edges > 1)
            continue;
        bool ok = true;
        for (std::size_t i = 3; i < n && ok; ++i) {
            const std::size_t m = i + 1;
            std::size_t misses = 0;
            for (std::size_t j = 0; j < i; ++j)
                misses += g.has_edge(perm[i], perm[j]) ? 0 : 1;
            const std::size_t bound = (mode == Mode::relaxed && m % 2 == 1) ? (m - 1) / 2 - 1 : m / 2 - 1;
            ok = misses <= bound;
        }
        if (ok)
            return detail::make_certificate(g, perm, mode);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace deltagraph

#endif // DELTAGRAPH_DELTA_HPP
