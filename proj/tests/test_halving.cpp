#include "support.h"

#include <gtest/gtest.h>

using namespace kfission;
using namespace kfission::test;

TEST(Halving, UnitSquareDiagonals) {
    const std::vector<Edge> want{{0, 2}, {1, 3}};
    EXPECT_EQ(halving_edges_oracle(unit_square()).edges(), want);
    EXPECT_EQ(halving_edges_sweep(unit_square()).edges(), want);
}

TEST(Halving, TriangleWithInteriorPoint) {
    const Geograph g = halving_edges(triangle_with_interior());
    const std::vector<Edge> want{{0, 3}, {1, 3}, {2, 3}};
    EXPECT_EQ(g.edges(), want);
    EXPECT_EQ(degrees(g)[3], 3u);
}

TEST(Halving, TwoPoints) {
    const std::vector<Edge> want{{0, 1}};
    EXPECT_EQ(halving_edges(two_path()).edges(), want);
}

TEST(Halving, ConvexOctagonIsMatching) {
    const Geograph g = halving_edges_sweep(convex_polygon(8));
    EXPECT_EQ(g.edges().size(), 4u);
    EXPECT_EQ(degree_sequence(g), std::vector<std::size_t>(8, 1));
}

TEST(Halving, DegreeSequences) {
    EXPECT_EQ(degree_sequence(halving_edges(unit_square())), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_EQ(degree_sequence(halving_edges(star_config(6))), (std::vector<std::size_t>{1, 1, 1, 1, 1, 5}));
    EXPECT_EQ(degree_sequence(halving_edges(find_unicyclic6())), (std::vector<std::size_t>{1, 1, 1, 3, 3, 3}));
}

TEST(Halving, Errors) {
    try {
        halving_edges(Config({{0, 0}, {1, 0}, {0, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddPointCount);
    }
    const Config collinear = Config::unchecked({{0, 0}, {1, 1}, {2, 2}, {0, 1}});
    EXPECT_THROW(halving_edges_sweep(collinear), NotGeneralPositionError);
    EXPECT_THROW(halving_edges_oracle(collinear), NotGeneralPositionError);
}

TEST(Halving, OracleMatchesBruteForce) {
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        const Config c = random_rational_config(rng, 4 + 2 * static_cast<std::size_t>(it % 6));
        EXPECT_EQ(edge_set(halving_edges_oracle(c)), brute_halving(c));
    }
}

TEST(Halving, SweepMatchesOracleOnRandomConfigs) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> half(2, 15);
    for (int it = 0; it < 200; ++it) {
        const Config c = random_rational_config(rng, 2 * half(rng));
        EXPECT_EQ(halving_edges_sweep(c).edges(), halving_edges_oracle(c).edges()) << "config " << it;
    }
}

TEST(Halving, ParallelSweepIsDeterministic) {
    std::mt19937 rng(8);
    const Config c = random_config(rng, 120);
    const Geograph one = halving_edges_sweep(c, 1);
    EXPECT_EQ(halving_edges_sweep(c, 4), one);
    EXPECT_EQ(halving_edges_sweep(c, 0), one);
}

TEST(Halving, AffineInvariance) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-7, 7);
    for (int it = 0; it < 50; ++it) {
        const Config c = random_rational_config(rng, 10);
        AffineMap m;
        do {
            m.a11 = d(rng);
            m.a12 = d(rng);
            m.a21 = d(rng);
            m.a22 = Rational(d(rng), 3);
        } while (m.det().is_zero());
        m.ty = Rational(d(rng), 5);
        EXPECT_EQ(halving_edges(affine_apply(c, m)).edges(), halving_edges(c).edges());
    }
}

TEST(Halving, SquashPreservesEdges) {
    AffineMap squash;
    squash.a22 = Rational(1, 10);
    EXPECT_EQ(halving_edges(affine_apply(unit_square(), squash)).edges(), halving_edges(unit_square()).edges());
}

TEST(Halving, InvariantsHoldOnRandomConfigs) {
    std::mt19937 rng(4);
    for (int it = 0; it < 60; ++it) {
        const Geograph g = halving_edges(random_config(rng, 2 + 2 * static_cast<std::size_t>(it % 12)));
        EXPECT_NO_THROW(check_halving_invariants(g));
        EXPECT_GE(g.edges().size(), g.size() / 2);
        for (std::size_t d : degrees(g)) EXPECT_EQ(d % 2, 1u);
    }
}

TEST(Halving, InvariantCheckerRejectsBadGraph) {
    const Geograph bad(unit_square(), {{0, 1}});
    EXPECT_THROW(check_halving_invariants(bad), Error);
}

TEST(Geograph, RejectsMalformedEdges) {
    EXPECT_THROW(Geograph(unit_square(), {{0, 0}}), Error);
    EXPECT_THROW(Geograph(unit_square(), {{0, 9}}), Error);
    EXPECT_THROW(Geograph(unit_square(), {{0, 1}, {1, 0}}), Error);
    const Geograph g(unit_square(), {{3, 1}, {2, 0}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
}
