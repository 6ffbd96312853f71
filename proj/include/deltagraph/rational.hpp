#ifndef DELTAGRAPH_RATIONAL_HPP
#define DELTAGRAPH_RATIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace deltagraph
{

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
/// Row-major; every row has the same length.
using RationalMatrix = std::vector<RationalVector>;

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/// Canonical "p/q" text, q > 0, always with the slash.
inline std::string to_fraction_string(Rational q)
{
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p". Rejects zero denominators.
inline Rational parse_fraction(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// True when a and b are parallel (one is a scalar multiple of the other),
/// including the case where either is zero.
inline bool is_scalar_multiple(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("is_scalar_multiple: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return true;
}

/// Rescales v to the primitive integer vector on the same ray: denominators
/// cleared, common content divided out. The zero vector is returned as is.
inline RationalVector primitive_integer(RationalVector v)
{
    mpz_class lcm = 1, content = 0;
    for (const auto& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
        x *= lcm;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
    }
    if (content == 0)
        return v;
    for (auto& x : v)
        x /= content;
    return v;
}

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing each row's denominators. No tolerance anywhere.
inline std::size_t rank(const RationalMatrix& m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols)
            throw std::invalid_argument("rank: ragged matrix");
        const RationalVector scaled = primitive_integer(m[i]);
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = scaled[j].get_num();
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are taken left to right, first nonzero row wins.
inline std::vector<std::size_t> reduce_to_rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        const Rational inv = 1 / m[r][col];
        for (std::size_t j = col; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    return pivots;
}

/// Draws nonzero integers uniformly from [-bound, bound] \ {0}. Stands in for
/// choosing parameters transcendental over everything chosen so far: every
/// required non-vanishing condition is then checked exactly and the draw is
/// repeated on failure.
class GenericSampler
{
public:
    explicit GenericSampler(std::uint64_t seed, long bound = 16) : seed_(seed), bound_(bound), engine_(seed)
    {
        if (bound < 1)
            throw std::invalid_argument("sampler bound must be >= 1");
    }

    Rational next()
    {
        std::uniform_int_distribution<long> dist(1, 2 * bound_);
        const long k = dist(engine_);
        return Rational(k <= bound_ ? k - bound_ - 1 : k - bound_);
    }

    void widen() { bound_ *= 2; }

    std::uint64_t seed() const { return seed_; }
    long bound() const { return bound_; }

private:
    std::uint64_t seed_;
    long bound_;
    std::mt19937_64 engine_;
};

} // namespace deltagraph

#endif // DELTAGRAPH_RATIONAL_HPP
