#ifndef DELTAGRAPH_ORTHO_REP_HPP
#define DELTAGRAPH_ORTHO_REP_HPP

#include <array>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "delta.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace deltagraph
{

/// One exact vector per vertex; vectors[v] belongs to vertex v.
struct OrthoRep
{
    std::size_t dim = 0;
    std::vector<RationalVector> vectors;

    friend bool operator==(const OrthoRep&, const OrthoRep&) = default;
};

struct GramMatrix
{
    RationalMatrix entries;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

/// Resampling budget for one vector: after every `widen_every` failed draws
/// the sampler window doubles.
struct RetryPolicy
{
    std::size_t max_attempts = 32;
    std::size_t widen_every = 8;
};

/// Bounded resampling ran out. Points at a bug, since a generic draw
/// succeeds with probability close to one.
class RetryExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
inline bool all_nonzero(std::span<const Rational> v)
{
    for (const auto& x : v)
        if (x == 0)
            return false;
    return true;
}

inline bool independent_of_all(std::span<const Rational> v, std::span<const RationalVector> others)
{
    for (const auto& u : others)
        if (is_scalar_multiple(v, u))
            return false;
    return true;
}

template <class Draw>
RationalVector resample_until(GenericSampler& sampler, const RetryPolicy& policy, const char* what, Draw&& draw)
{
    for (std::size_t attempt = 0; attempt < policy.max_attempts; ++attempt) {
        if (attempt > 0 && attempt % policy.widen_every == 0)
            sampler.widen();
        if (auto v = draw())
            return std::move(*v);
    }
    throw RetryExhausted(std::string(what) + ": no admissible vector after " + std::to_string(policy.max_attempts) +
                         " draws");
}
} // namespace detail

/// New vector for a vertex joining the priors.
///
/// Orthogonal to priors[i] exactly where adjacency[i] is false, with nonzero
/// inner product where it is true, every coordinate nonzero, and parallel to
/// no prior. The neighbour inner products enter as extra unknowns h_i = -g_i
/// of one homogeneous system
///
///     <priors[i], x> + h_i = 0   (neighbour)
///     <priors[i], x>       = 0   (non-neighbour)
///
/// which is reduced once; each draw samples the free columns and
/// back-substitutes the pivots. Throws std::invalid_argument when the
/// non-neighbours number at least dim (x could be forced to zero).
inline RationalVector extend(std::span<const RationalVector> priors, const std::vector<bool>& adjacency,
                             std::size_t dim, GenericSampler& sampler, const RetryPolicy& policy = {})
{
    if (adjacency.size() != priors.size())
        throw std::invalid_argument("extend: adjacency row length differs from prior count");
    std::size_t k = 0;
    for (bool a : adjacency)
        k += a ? 1 : 0;
    const std::size_t t = priors.size() - k;
    if (t >= dim)
        throw std::invalid_argument("extend: " + std::to_string(t) + " orthogonality constraints in dimension " +
                                    std::to_string(dim));

    const std::size_t cols = dim + k;
    RationalMatrix system;
    system.reserve(priors.size());
    for (std::size_t i = 0, h = 0; i < priors.size(); ++i) {
        if (priors[i].size() != dim)
            throw std::invalid_argument("extend: prior vector has wrong dimension");
        RationalVector row(cols);
        std::copy(priors[i].begin(), priors[i].end(), row.begin());
        if (adjacency[i])
            row[dim + h++] = 1;
        system.push_back(std::move(row));
    }
    const std::vector<std::size_t> pivots = reduce_to_rref(system);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    auto draw = [&]() -> std::optional<RationalVector> {
        RationalVector y(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c])
                y[c] = sampler.next();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Rational s = 0;
            for (std::size_t c = pivots[r] + 1; c < cols; ++c)
                if (!is_pivot[c] && system[r][c] != 0)
                    s += system[r][c] * y[c];
            y[pivots[r]] = -s;
        }
        RationalVector x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim));
        if (!detail::all_nonzero(x))
            return std::nullopt;
        for (std::size_t h = 0; h < k; ++h)
            if (y[dim + h] == 0)
                return std::nullopt;
        if (!detail::independent_of_all(x, priors))
            return std::nullopt;
        for (std::size_t i = 0; i < priors.size(); ++i)
            if ((dot(priors[i], x) != 0) != adjacency[i])
                throw std::logic_error("extend: back-substitution broke an inner-product constraint");
        return primitive_integer(std::move(x));
    };
    return detail::resample_until(sampler, policy, "extend", draw);
}

/// Vectors for the base triple in dimension dim >= 3, delta form only.
///   3K1:   pairwise orthogonal.
///   K2+K1: <v1,v2> = <v2,v3> = 0 and <v1,v3> != 0.
/// v1 is drawn freely; v2 draws all but its last coordinate and solves that
/// one for orthogonality to v1; v3 comes from the general solver.
inline std::array<RationalVector, 3> seed_triple(BaseKind kind, std::size_t dim, GenericSampler& sampler,
                                                 const RetryPolicy& policy = {})
{
    if (dim < 3)
        throw std::invalid_argument("seed_triple: dimension must be at least 3");
    if (form_of(kind) != CertificateForm::delta)
        throw std::invalid_argument("seed_triple: base kind must be 3K1 or K2+K1");

    std::array<RationalVector, 3> out;
    out[0].resize(dim);
    for (auto& x : out[0])
        x = sampler.next();

    const RationalVector& v1 = out[0];
    out[1] = detail::resample_until(sampler, policy, "seed_triple", [&]() -> std::optional<RationalVector> {
        RationalVector v2(dim);
        Rational partial = 0;
        for (std::size_t j = 0; j + 1 < dim; ++j) {
            v2[j] = sampler.next();
            partial += v1[j] * v2[j];
        }
        v2[dim - 1] = -partial / v1[dim - 1];
        if (v2[dim - 1] == 0 || is_scalar_multiple(v1, v2))
            return std::nullopt;
        return primitive_integer(std::move(v2));
    });

    const std::vector<bool> row{kind == BaseKind::k2_plus_k1, false};
    out[2] = extend(std::span<const RationalVector>(out.data(), 2), row, dim, sampler, policy);
    return out;
}

/// Orthogonal representation of a delta-graph in dimension
/// maxdeg(complement(g)) + 1: the base triple, then one extension per
/// remaining vertex in certificate order.
inline OrthoRep construct(const Graph& g, const DeltaCertificate& cert, GenericSampler& sampler,
                          const RetryPolicy& policy = {})
{
    if (cert.form() != CertificateForm::delta)
        throw std::invalid_argument("construct: certificate must be in delta form");
    if (const auto check = check_certificate(g, cert); !check)
        throw std::invalid_argument("construct: invalid certificate: " + check.reason);

    const std::size_t n = g.order();
    OrthoRep rep;
    rep.dim = max_degree(complement(g)) + 1;
    rep.vectors.resize(n);

    std::vector<Vertex> order = cert.ordering;
    detail::normalize_base(g, order);

    std::vector<RationalVector> placed;
    placed.reserve(n);
    for (auto& v : seed_triple(cert.base_kind, rep.dim, sampler, policy))
        placed.push_back(std::move(v));
    for (std::size_t i = 3; i < n; ++i) {
        std::vector<bool> row(i);
        for (std::size_t j = 0; j < i; ++j)
            row[j] = g.has_edge(order[i], order[j]);
        placed.push_back(extend(placed, row, rep.dim, sampler, policy));
    }
    for (std::size_t i = 0; i < n; ++i)
        rep.vectors[order[i]] = std::move(placed[i]);
    return rep;
}

inline GramMatrix gram(const OrthoRep& rep)
{
    const std::size_t n = rep.vectors.size();
    GramMatrix m{RationalMatrix(n, RationalVector(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.entries[i][j] = m.entries[j][i] = dot(rep.vectors[i], rep.vectors[j]);
    return m;
}

inline std::size_t rank(const GramMatrix& m) { return rank(m.entries); }

/// Rank of the span of the representation's vectors.
inline std::size_t span_rank(const OrthoRep& rep) { return rank(rep.vectors); }

struct RepReport
{
    bool pattern_matches = false;
    bool coordinates_nonzero = false;
    bool pairwise_independent = false;
    bool dimension_matches = false;
    /// |G| - mindeg(G), present only when all four checks pass.
    std::optional<std::size_t> certified_bound;

    bool ok() const { return pattern_matches && coordinates_nonzero && pairwise_independent && dimension_matches; }
};

inline RepReport verify_rep(const Graph& g, const OrthoRep& rep)
{
    const std::size_t n = g.order();
    if (rep.vectors.size() != n)
        throw std::invalid_argument("verify_rep: representation has " + std::to_string(rep.vectors.size()) +
                                    " vectors for " + std::to_string(n) + " vertices");
    for (const auto& v : rep.vectors)
        if (v.size() != rep.dim)
            throw std::invalid_argument("verify_rep: vector length differs from declared dimension");

    RepReport r;
    r.pattern_matches = true;
    r.coordinates_nonzero = true;
    r.pairwise_independent = true;
    for (Vertex i = 0; i < n; ++i) {
        r.coordinates_nonzero = r.coordinates_nonzero && detail::all_nonzero(rep.vectors[i]);
        for (Vertex j = i + 1; j < n; ++j) {
            if ((dot(rep.vectors[i], rep.vectors[j]) != 0) != g.has_edge(i, j))
                r.pattern_matches = false;
            if (is_scalar_multiple(rep.vectors[i], rep.vectors[j]))
                r.pairwise_independent = false;
        }
    }
    r.dimension_matches = rep.dim == max_degree(complement(g)) + 1;
    if (r.ok())
        r.certified_bound = n - min_degree(g);
    return r;
}

/// Lossy decimal rendering of the Gram matrix, one row per line.
inline std::string to_decimal_text(const GramMatrix& m, int digits = 10)
{
    std::ostringstream out;
    out << std::setprecision(digits);
    for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j].get_d();
        out << '\n';
    }
    return out.str();
}

} // namespace deltagraph

#endif // DELTAGRAPH_ORTHO_REP_HPP
