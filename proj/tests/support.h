#pragma once

#include "kfission/builders.h"
#include "kfission/chains.h"
#include "kfission/fission.h"
#include "kfission/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace kfission::test {

inline Config unit_square() { return Config({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline Config triangle_with_interior() { return Config({{0, 0}, {4, 0}, {1, 3}, {Rational(3, 2), 1}}); }

/// Random integer-grid config in general position (rejection sampling).
inline Config random_config(std::mt19937& rng, std::size_t n, long grid = 1000) {
    std::uniform_int_distribution<long> d(-grid, grid);
    for (;;) {
        std::vector<RPoint> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
        if (is_general_position(std::span<const RPoint>(pts)).ok) return Config(std::move(pts));
    }
}

/// Random config with rational (non-integer) coordinates.
inline Config random_rational_config(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 37);
    for (;;) {
        std::vector<RPoint> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        if (is_general_position(std::span<const RPoint>(pts)).ok) return Config(std::move(pts));
    }
}

/// Independent brute-force halving test: counts points on each side of
/// every pair directly from the 2x2 determinant.
inline std::set<Edge> brute_halving(const Config& c) {
    std::set<Edge> out;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t pos = 0, neg = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const Rational det = (c[j].x - c[i].x) * (c[k].y - c[i].y) - (c[j].y - c[i].y) * (c[k].x - c[i].x);
                (det.sign() > 0 ? pos : neg) += 1;
            }
            if (pos == neg) out.insert({i, j});
        }
    }
    return out;
}

inline std::set<Edge> edge_set(const Geograph& g) { return {g.edges().begin(), g.edges().end()}; }

inline AbstractGraph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return {n, e};
}

inline AbstractGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) e.emplace_back(i, j);
        }
    }
    return {n, e};
}

}  // namespace kfission::test
