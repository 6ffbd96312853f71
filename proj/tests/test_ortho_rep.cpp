#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "deltagraph/delta.hpp"
#include "deltagraph/generators.hpp"
#include "deltagraph/ortho_rep.hpp"
#include "oracles.hpp"

using namespace deltagraph;

namespace
{
Graph prism() { return complement(gen::cycle(6)); }

OrthoRep build(const Graph& g, std::uint64_t seed = 0)
{
    const auto cert = recognize_delta(g);
    if (!cert)
        throw std::runtime_error("test graph is not a delta-graph");
    GenericSampler s(seed);
    return construct(g, *cert, s);
}

bool nonzero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
}
} // namespace

TEST(SeedTriple, ThreeK1)
{
    GenericSampler s(1);
    const auto t = seed_triple(BaseKind::three_k1, 3, s);
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(nonzero(t[i]));
        for (int j = i + 1; j < 3; ++j) {
            EXPECT_EQ(dot(t[i], t[j]), 0);
        }
    }
    const OrthoRep rep{3, {t[0], t[1], t[2]}};
    const GramMatrix g = gram(rep);
    EXPECT_EQ(rank(g), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_GT(g.entries[i][i], 0);
    }
}

TEST(SeedTriple, K2PlusK1)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenericSampler s(seed);
        const auto t = seed_triple(BaseKind::k2_plus_k1, 4, s);
        EXPECT_EQ(dot(t[0], t[1]), 0);
        EXPECT_EQ(dot(t[1], t[2]), 0);
        EXPECT_NE(dot(t[0], t[2]), 0);
        for (const auto& v : t) {
            EXPECT_EQ(v.size(), 4u);
            EXPECT_TRUE(nonzero(v));
        }
        EXPECT_FALSE(is_scalar_multiple(t[0], t[2]));
    }
}

TEST(SeedTriple, Errors)
{
    GenericSampler s(0);
    EXPECT_THROW(seed_triple(BaseKind::three_k1, 2, s), std::invalid_argument);
    EXPECT_THROW(seed_triple(BaseKind::k3, 3, s), std::invalid_argument);
}

TEST(Extend, AdjacentToAllOfThreeK1)
{
    GenericSampler s(2);
    const auto t = seed_triple(BaseKind::three_k1, 3, s);
    const std::vector<RationalVector> priors(t.begin(), t.end());
    const RationalVector v = extend(priors, {true, true, true}, 3, s);
    EXPECT_TRUE(nonzero(v));
    for (const auto& p : priors) {
        EXPECT_NE(dot(p, v), 0);
        EXPECT_FALSE(is_scalar_multiple(p, v));
    }
}

TEST(Extend, TooManyOrthogonalityConstraints)
{
    GenericSampler s(2);
    const auto t = seed_triple(BaseKind::three_k1, 3, s);
    const std::vector<RationalVector> priors(t.begin(), t.end());
    EXPECT_THROW(extend(priors, {false, false, false}, 3, s), std::invalid_argument);
    EXPECT_THROW(extend(priors, {true, true}, 3, s), std::invalid_argument);
}

TEST(Extend, K2PlusK1Case)
{
    GenericSampler s(3);
    const auto t = seed_triple(BaseKind::k2_plus_k1, 3, s);
    const std::vector<RationalVector> priors(t.begin(), t.end());
    const RationalVector v = extend(priors, {true, true, false}, 3, s);
    EXPECT_NE(dot(priors[0], v), 0);
    EXPECT_NE(dot(priors[1], v), 0);
    EXPECT_EQ(dot(priors[2], v), 0);
}

TEST(Extend, OutputIsPrimitiveInteger)
{
    GenericSampler s(4);
    const auto t = seed_triple(BaseKind::three_k1, 5, s);
    const std::vector<RationalVector> priors(t.begin(), t.end());
    const RationalVector v = extend(priors, {true, false, true}, 5, s);
    mpz_class g = 0;
    for (const auto& x : v) {
        EXPECT_EQ(x.get_den(), 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    EXPECT_EQ(g, 1);
}

TEST(Extend, RetryExhaustion)
{
    GenericSampler s(0);
    const auto t = seed_triple(BaseKind::three_k1, 3, s);
    const std::vector<RationalVector> priors(t.begin(), t.end());
    EXPECT_THROW(extend(priors, {true, true, true}, 3, s, RetryPolicy{0, 8}), RetryExhausted);
}

TEST(Construct, Prism)
{
    const OrthoRep rep = build(prism());
    EXPECT_EQ(rep.dim, 3u);
    const RepReport r = verify_rep(prism(), rep);
    EXPECT_TRUE(r.pattern_matches);
    EXPECT_TRUE(r.coordinates_nonzero);
    EXPECT_TRUE(r.pairwise_independent);
    EXPECT_TRUE(r.dimension_matches);
    EXPECT_EQ(r.certified_bound, std::optional<std::size_t>{3});
    EXPECT_LE(rank(gram(rep)), 3u);
}

TEST(Construct, ComplementOfC8)
{
    const Graph g = complement(gen::cycle(8));
    const OrthoRep rep = build(g);
    EXPECT_EQ(rep.dim, 3u);
    EXPECT_TRUE(verify_rep(g, rep).ok());
}

TEST(Construct, P4)
{
    const OrthoRep rep = build(gen::path(4));
    EXPECT_EQ(rep.dim, 3u);
    const RepReport r = verify_rep(gen::path(4), rep);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.certified_bound, std::optional<std::size_t>{3});
}

TEST(Construct, ReproducibleAndSeedSensitive)
{
    EXPECT_EQ(build(prism(), 7), build(prism(), 7));
    EXPECT_NE(build(prism(), 7), build(prism(), 8));
}

TEST(Construct, Errors)
{
    GenericSampler s(0);
    const auto c = recognize_c_delta(gen::cycle(6));
    ASSERT_TRUE(c);
    EXPECT_THROW(construct(gen::cycle(6), *c, s), std::invalid_argument);
    DeltaCertificate bad = flip_form(*c);
    bad.excluded_counts[0] += 1;
    EXPECT_THROW(construct(prism(), bad, s), std::invalid_argument);
}

TEST(Gram, BasicMatrices)
{
    const OrthoRep basis{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    const GramMatrix id = gram(basis);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(id.entries[i][j], i == j ? 1 : 0);
        }
    EXPECT_EQ(rank(id), 3u);

    const OrthoRep same{2, RationalMatrix(5, RationalVector{1, 1})};
    EXPECT_EQ(rank(RationalMatrix(5, RationalVector(5, 1))), 1u);
    EXPECT_EQ(rank(gram(same)), 1u);
}

TEST(Gram, DecimalText)
{
    const OrthoRep r{2, {{1, 2}, {Rational(1, 3), 1}}};
    EXPECT_EQ(to_decimal_text(gram(r), 4), "5 2.333\n2.333 1.111\n");
}

TEST(VerifyRep, DetectsEachDefect)
{
    const Graph g = prism();
    const OrthoRep good = build(g);

    OrthoRep zeroed = good;
    zeroed.vectors[0][1] = 0;
    EXPECT_FALSE(verify_rep(g, zeroed).coordinates_nonzero);
    EXPECT_FALSE(verify_rep(g, zeroed).certified_bound);

    OrthoRep parallel = good;
    for (std::size_t j = 0; j < parallel.dim; ++j)
        parallel.vectors[1][j] = 2 * parallel.vectors[0][j];
    EXPECT_FALSE(verify_rep(g, parallel).pairwise_independent);

    EXPECT_FALSE(verify_rep(gen::cycle(6), good).pattern_matches);

    OrthoRep padded = good;
    padded.dim = 4;
    for (auto& v : padded.vectors)
        v.push_back(1);
    EXPECT_FALSE(verify_rep(g, padded).dimension_matches);

    OrthoRep short_rep = good;
    short_rep.vectors.pop_back();
    EXPECT_THROW(verify_rep(g, short_rep), std::invalid_argument);
    OrthoRep ragged = good;
    ragged.vectors[2].pop_back();
    EXPECT_THROW(verify_rep(g, ragged), std::invalid_argument);
}

TEST(VerifyRep, RelabelledGraphKeepsPattern)
{
    const Graph g = complement(gen::cycle(7));
    const OrthoRep rep = build(g);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        // Vertex i of h is vertex perm[i] of g.
        const Graph h = induced_subgraph(g, perm);
        OrthoRep moved{rep.dim, {}};
        for (Vertex v : perm)
            moved.vectors.push_back(rep.vectors[v]);
        EXPECT_TRUE(verify_rep(h, moved).ok());
        const GramMatrix a = gram(rep), b = gram(moved);
        for (Vertex i = 0; i < g.order(); ++i)
            for (Vertex j = 0; j < g.order(); ++j) {
                EXPECT_EQ(b.entries[i][j], a.entries[perm[i]][perm[j]]);
            }
    }
}

TEST(Construct, EveryAtlasDeltaGraph)
{
    std::size_t built = 0;
    for (const Graph& g : oracle::load_atlas()) {
        const auto cert = recognize_delta(g);
        if (!cert)
            continue;
        GenericSampler s(built);
        const OrthoRep rep = construct(g, *cert, s);
        const RepReport r = verify_rep(g, rep);
        ASSERT_TRUE(r.ok()) << to_graph6(g);
        EXPECT_EQ(r.certified_bound, g.order() - min_degree(g));
        const std::size_t gr = rank(gram(rep));
        // Two independent rank computations of the same quantity.
        EXPECT_EQ(gr, span_rank(rep));
        EXPECT_EQ(gr, oracle::rational_rank(rep.vectors));
        EXPECT_EQ(gr, oracle::rational_rank(gram(rep).entries));
        EXPECT_LE(gr, rep.dim);
        ++built;
    }
    EXPECT_EQ(built, 218u);
}
