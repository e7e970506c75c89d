#include "kfission/fission.h"

#include "support.h"

#include <gtest/gtest.h>

using namespace kfission;
using namespace kfission::test;

namespace {

Rational abs_r(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Recomputes the safe epsilon from scratch: descend from 2^20 by halving until
// both the distance bound and the separation bound hold. The separation
// bound is measured from the lower-indexed endpoint of each segment.
Rational epsilon_oracle(const Config& c) {
    Rational d2 = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const Rational dx = c[j].x - c[i].x, dy = c[j].y - c[i].y;
            const Rational d = dx * dx + dy * dy;
            if (d2.sign() < 0 || d < d2) d2 = d;
        }
    }
    auto separated = [&](const Rational& e) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                for (std::size_t p = 0; p < c.size(); ++p) {
                    if (p == i || p == j) continue;
                    const Rational bx = c[j].x - c[i].x, by = c[j].y - c[i].y;
                    const Rational px = c[p].x - c[i].x, py = c[p].y - c[i].y;
                    const Rational lhs = abs_r(bx * py - by * px);
                    const Rational rhs = Rational(2) * e * (abs_r(bx) + abs_r(by) + abs_r(px) + abs_r(py)) +
                                         Rational(4) * e * e;
                    if (lhs <= rhs) return false;
                }
            }
        }
        return true;
    };
    Rational e = Rational::pow2(20);
    while (!(Rational(16) * e * e < d2) || !separated(e)) e /= Rational(2);
    return e;
}

void expect_plain_laws(const Geograph& g, const FissionResult& r, std::size_t k) {
    EXPECT_EQ(r.geograph.size(), k * g.size());
    EXPECT_EQ(r.geograph.edges().size(), k * g.edges().size());
    const EdgeClasses ec = classify_edges(r);
    EXPECT_TRUE(ec.non_traversing.empty());
    std::map<Edge, std::size_t> per_base;
    for (const auto& [a, b] : ec.traversing) {
        const std::size_t u = r.origin[a].base, v = r.origin[b].base;
        ASSERT_TRUE(g.has_edge(u, v)) << "cross-cluster edge between non-adjacent clusters";
        ++per_base[{std::min(u, v), std::max(u, v)}];
    }
    for (const Edge& e : g.edges()) EXPECT_EQ(per_base[e], k);
    // Covering map: the neighbours of every point map bijectively onto the
    // neighbours of its base vertex.
    const AbstractGraph h = AbstractGraph::of(r.geograph);
    const AbstractGraph base = AbstractGraph::of(g);
    for (std::size_t p = 0; p < h.vertex_count(); ++p) {
        std::multiset<std::size_t> image;
        for (std::size_t q : h.adjacency()[p]) image.insert(r.origin[q].base);
        const auto& nb = base.adjacency()[r.origin[p].base];
        EXPECT_EQ(image, std::multiset<std::size_t>(nb.begin(), nb.end()));
    }
    EXPECT_TRUE(is_plain(r));
    EXPECT_TRUE(verify_fission(r).ok());
}

}  // namespace

TEST(SafeEpsilon, GoldenValues) {
    EXPECT_EQ(epsilon_oracle(unit_square()), Rational(1, 8));
    EXPECT_EQ(epsilon_oracle(two_path()), Rational(1, 8));
    EXPECT_EQ(epsilon_oracle(find_unicyclic6()), Rational(1, 32));
    EXPECT_EQ(safe_epsilon(halving_edges(unit_square())), Rational(1, 8));
    EXPECT_EQ(safe_epsilon(halving_edges(two_path())), Rational(1, 8));
    EXPECT_EQ(safe_epsilon(halving_edges(find_unicyclic6())), Rational(1, 32));
}

TEST(SafeEpsilon, MatchesOracleOnRandomConfigs) {
    std::mt19937 rng(55);
    for (int it = 0; it < 20; ++it) {
        const Config c = random_config(rng, 6, 50);
        EXPECT_EQ(safe_epsilon(halving_edges(c)), epsilon_oracle(c));
    }
}

TEST(Place, RotatesAndScales) {
    EXPECT_EQ(place({1, 1}, Rational(1, 2), Direction(0, 1), {2, 0}), (RPoint{1, 2}));
    EXPECT_EQ(place({0, 0}, Rational(1), Direction(1, 1), {1, 0}), (RPoint{1, 1}));
}

TEST(Plan, RejectsMalformedPlans) {
    FissionPlan p;
    p.base = halving_edges(two_path());
    p.eps = Rational(1, 8);
    p.templates.assign(2, ClusterTemplate{{{0, 0}, {1, 0}}});
    p.rotation.assign(2, Direction(0, 1));
    p.scale.assign(2, Rational(1, 32));
    EXPECT_NO_THROW(validate_plan(p));
    auto expect_kind = [](const FissionPlan& bad) {
        try {
            validate_plan(bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::PlanInvariantViolation);
        }
    };
    FissionPlan big = p;
    big.eps = Rational(1);
    expect_kind(big);
    FissionPlan wide = p;
    wide.scale[0] = Rational(1);
    expect_kind(wide);
    FissionPlan uneven = p;
    uneven.templates[1].points.push_back({2, 0});
    expect_kind(uneven);
}

TEST(Fission, IdentityIsOneFission) {
    const Geograph g = halving_edges(find_unicyclic6());
    const FissionResult r = identity_fission(g);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.geograph, g);
    EXPECT_TRUE(verify_fission(r).ok());
}

TEST(Fission, IndexLayout) {
    const Geograph g = halving_edges(unit_square());
    const FissionResult r = plain_fission(g, 3);
    for (std::size_t i = 0; i < r.origin.size(); ++i) {
        EXPECT_EQ(r.origin[i], (Origin{i % 4, i / 4}));
    }
}

class PlainLaws : public ::testing::TestWithParam<std::tuple<int, std::size_t>> {};

TEST_P(PlainLaws, Hold) {
    const auto [which, k] = GetParam();
    const Config c = which == 0 ? unit_square() : which == 1 ? star_config(6) : find_unicyclic6();
    const Geograph g = halving_edges(c);
    expect_plain_laws(g, plain_fission(g, k), k);
}

INSTANTIATE_TEST_SUITE_P(Bases, PlainLaws,
                         ::testing::Combine(::testing::Values(0, 1, 2), ::testing::Values(std::size_t{2}, std::size_t{3})));

TEST(Plain, RandomBases) {
    std::mt19937 rng(61);
    for (int it = 0; it < 6; ++it) {
        const Geograph g = halving_edges(random_config(rng, 6, 40));
        expect_plain_laws(g, plain_fission(g, 2), 2);
    }
}

TEST(Plain, Transitivity) {
    const Geograph g = halving_edges(star_config(6));
    const FissionResult r2 = plain_fission(g, 2);
    const FissionResult r6 = plain_fission(r2.geograph, 3);
    expect_plain_laws(r2.geograph, r6, 3);
    // Composing the origin maps exhibits r6 as a plain 6-fission of g.
    FissionResult composed = r6;
    composed.base = g;
    composed.k = 6;
    composed.eps = r2.eps;
    for (std::size_t i = 0; i < r6.origin.size(); ++i) {
        const Origin mid = r6.origin[i];
        composed.origin[i] = {r2.origin[mid.base].base, r2.origin[mid.base].rank + 2 * mid.rank};
    }
    EXPECT_EQ(r6.geograph.edges().size(), 6 * g.edges().size());
    expect_plain_laws(g, composed, 6);
}

TEST(Plain, ComponentLaws) {
    for (const Config& c : {unit_square(), star_config(6), find_unicyclic6()}) {
        const Geograph g = halving_edges(c);
        const FissionResult r = plain_fission(g, 2);
        const auto comps = connected_components(AbstractGraph::of(r.geograph));
        const auto base_comps = connected_components(AbstractGraph::of(g));
        if (base_comps.size() != 1) continue;
        for (const auto& comp : comps) {
            EXPECT_EQ(comp.size() % g.size(), 0u);
            std::vector<std::size_t> hits(g.size(), 0);
            for (std::size_t p : comp) ++hits[r.origin[p].base];
            EXPECT_EQ(std::set<std::size_t>(hits.begin(), hits.end()).size(), 1u);
        }
    }
}

TEST(Parallel, UnicyclicTwoFissionIsTensorProduct) {
    const Geograph g = halving_edges(find_unicyclic6());
    const FissionResult r = parallel_fission(g, 2);
    const AbstractGraph t = tensor_with_k2(AbstractGraph::of(g));
    EXPECT_EQ(AbstractGraph::of(r.geograph), t);
    EXPECT_TRUE(isomorphic_small(AbstractGraph::of(r.geograph), t));
}

TEST(Parallel, BipartiteBaseGivesTwoCopies) {
    const Geograph g = halving_edges(star_config(6));
    const AbstractGraph h = AbstractGraph::of(parallel_fission(g, 2).geograph);
    const AbstractGraph a = AbstractGraph::of(g);
    EXPECT_TRUE(isomorphic_small(h, disjoint_union(a, a)));
}

TEST(Parallel, OddKAddsOneCopyOfBase) {
    const Geograph g = halving_edges(find_unicyclic6());
    const AbstractGraph h = AbstractGraph::of(parallel_fission(g, 3).geograph);
    const AbstractGraph a = AbstractGraph::of(g);
    const auto comps = connected_components(h);
    ASSERT_EQ(comps.size(), 2u);
    std::vector<std::size_t> small = comps[0].size() == 6 ? comps[0] : comps[1];
    std::vector<std::size_t> large = comps[0].size() == 6 ? comps[1] : comps[0];
    EXPECT_TRUE(isomorphic_small(h.induced(small), a));
    EXPECT_TRUE(isomorphic_small(h.induced(large), tensor_with_k2(a)));
}

TEST(Parallel, EvenKIsBipartite) {
    for (std::size_t k : {2u, 4u}) {
        const FissionResult r = parallel_fission(halving_edges(find_unicyclic6()), k);
        EXPECT_TRUE(is_bipartite(AbstractGraph::of(r.geograph)).bipartite);
        EXPECT_TRUE(verify_fission(r).ok());
    }
}

TEST(Forest, EdgeCountFormula) {
    const Geograph g = halving_edges(find_unicyclic6());
    for (const Config& b : {two_path(), unit_square(), star_config(6)}) {
        const FissionResult r = forest_fission(g, b);
        const std::size_t eb = halving_edges(b).edges().size();
        EXPECT_EQ(r.geograph.size(), g.size() * b.size());
        EXPECT_EQ(r.geograph.edges().size(), b.size() * g.edges().size() + g.edges().size() * eb);
    }
}

TEST(Forest, RejectsNonForest) {
    try {
        forest_fission(halving_edges(star_config(6)), two_path());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOneForest);
    }
}

TEST(Forest, SequenceCounts) {
    const FissionResult g1 = g_sequence(1);
    EXPECT_EQ(g1.geograph.size(), 6u);
    EXPECT_EQ(g1.geograph.edges().size(), 6u);
    const FissionResult g2 = g_sequence(2);
    EXPECT_EQ(g2.geograph.size(), 36u);
    EXPECT_EQ(g2.geograph.edges().size(), 72u);
}

TEST(Chains, SplitUnderFission) {
    const Geograph star = halving_edges(star_config(6));
    EXPECT_TRUE(chain_split_check(star, plain_fission(star, 2)));
    const Geograph poly = halving_edges(convex_polygon(4));
    EXPECT_TRUE(chain_split_check(poly, parallel_fission(poly, 3)));
    const Geograph uni = halving_edges(find_unicyclic6());
    EXPECT_TRUE(chain_split_check(uni, plain_fission(uni, 2)));
}

TEST(Exhibits, DivergentPlainFissions) {
    const Geograph g = halving_edges(find_unicyclic6());
    const auto [two_triangles, hexagon] = divergent_plain_fissions(g);
    EXPECT_TRUE(is_plain(two_triangles));
    EXPECT_TRUE(is_plain(hexagon));
    const auto comps_of = [](const FissionResult& r) {
        return connected_components(AbstractGraph::of(r.geograph)).size();
    };
    EXPECT_NE(AbstractGraph::of(two_triangles.geograph), AbstractGraph::of(hexagon.geograph));
    EXPECT_NE(is_bipartite(AbstractGraph::of(two_triangles.geograph)).bipartite,
              is_bipartite(AbstractGraph::of(hexagon.geograph)).bipartite);
    EXPECT_GE(comps_of(two_triangles), 1u);
}

TEST(Exhibits, TwoPath) {
    const auto [aligned, vertical] = two_path_exhibits();
    EXPECT_EQ(aligned.geograph.edges().size(), 3u);
    EXPECT_EQ(vertical.geograph.edges().size(), 2u);
    const EdgeClasses ec = classify_edges(aligned);
    ASSERT_EQ(ec.non_traversing.size(), 1u);
    const auto [a, b] = ec.non_traversing[0];
    const Config& base = aligned.base.config();
    EXPECT_TRUE(corridor_contains(base[0], base[1], aligned.eps,
                                  Direction(aligned.config[b] - aligned.config[a])));
    EXPECT_FALSE(is_plain(aligned));
    EXPECT_TRUE(is_plain(vertical));
    EXPECT_TRUE(verify_fission(aligned).ok());
}

TEST(Reconstruct, RoundTripsOrigin) {
    const Geograph g = halving_edges(unit_square());
    const FissionResult r = plain_fission(g, 2);
    const FissionResult back = reconstruct_fission(g, r.geograph, r.origin);
    EXPECT_EQ(back.k, 2u);
    EXPECT_LE(back.eps, r.eps);
    EXPECT_TRUE(verify_fission(back).ok());
}

TEST(Verify, DetectsTamperedEdges) {
    const Geograph g = halving_edges(unit_square());
    FissionResult r = plain_fission(g, 2);
    std::vector<Edge> e = r.geograph.edges();
    e.pop_back();
    r.geograph = Geograph(r.config, e);
    const FissionReport rep = verify_fission(r);
    EXPECT_FALSE(rep.ok());
    ASSERT_NE(rep.first_failure(), nullptr);
}

TEST(RotationCandidates, OrderAndPrimitivity) {
    EXPECT_EQ(rotation_candidate(0), Direction(-1, -1));
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < 64; ++i) {
        const Direction d = rotation_candidate(i);
        EXPECT_TRUE(seen.insert({d.dx().str(), d.dy().str()}).second);
    }
}
