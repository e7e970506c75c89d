#include "kfission/halving.h"

#include <algorithm>
#include <string>
#include <thread>

namespace kfission {

Geograph::Geograph(Config config, std::vector<Edge> edges)
    : config_(std::move(config)), edges_(std::move(edges)) {
    for (auto& [i, j] : edges_) {
        if (i > j) std::swap(i, j);
        if (i == j || j >= config_.size()) {
            throw Error(ErrorKind::InvariantViolation,
                        "bad edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw Error(ErrorKind::InvariantViolation, "duplicate edge");
    }
}

bool Geograph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<std::vector<std::size_t>> Geograph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(size());
    for (const auto& [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

namespace {

void check_preconditions(const Config& c) {
    if (c.size() < 2) throw Error(ErrorKind::OddPointCount, "need at least two points");
    if (c.size() % 2 != 0) {
        throw Error(ErrorKind::OddPointCount, std::to_string(c.size()) + " points");
    }
}

[[noreturn]] void throw_collinear(std::size_t a, std::size_t b, std::size_t c) {
    std::array<std::size_t, 3> w{a, b, c};
    std::sort(w.begin(), w.end());
    throw NotGeneralPositionError(w, "points " + std::to_string(w[0]) + ", " +
                                         std::to_string(w[1]) + ", " + std::to_string(w[2]) +
                                         " are collinear");
}

// Direction from the pivot, scaled to integers (a positive rescaling keeps
// every orientation test intact).
struct Ray {
    mpz_class x;
    mpz_class y;
    std::size_t target;
};

int half_plane(const Ray& r) {
    return (sgn(r.y) > 0 || (sgn(r.y) == 0 && sgn(r.x) > 0)) ? 0 : 1;
}

int cross_sign(const Ray& a, const Ray& b) {
    return sgn(a.x * b.y - a.y * b.x);
}

// Halving partners j > p of pivot p.
std::vector<std::size_t> sweep_pivot(const Config& c, std::size_t p) {
    const std::size_t n = c.size();
    std::vector<Ray> rays;
    rays.reserve(n - 1);
    for (std::size_t q = 0; q < n; ++q) {
        if (q == p) continue;
        const RPoint d = c[q] - c[p];
        if (d.x.is_zero() && d.y.is_zero()) {
            throw NotGeneralPositionError({std::min(p, q), std::max(p, q), std::max(p, q)},
                                          "duplicate points");
        }
        rays.push_back({d.x.num() * d.y.den(), d.y.num() * d.x.den(), q});
    }
    std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
        const int ha = half_plane(a);
        const int hb = half_plane(b);
        if (ha != hb) return ha < hb;
        const int s = cross_sign(a, b);
        if (s == 0 && a.target != b.target) throw_collinear(p, a.target, b.target);
        return s > 0;
    });
    const std::size_t m = rays.size();
    // Antiparallel rays are collinear with the pivot as well.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (cross_sign(rays[i], rays[i + 1]) == 0) {
            throw_collinear(p, rays[i].target, rays[i + 1].target);
        }
    }
    const std::size_t want = (n - 2) / 2;
    std::vector<std::size_t> partners;
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (j < i + 1) j = i + 1;
        while (j < i + m && cross_sign(rays[i], rays[j % m]) > 0) ++j;
        const std::size_t left = j - i - 1;
        if (left == want && rays[i].target > p) partners.push_back(rays[i].target);
        if (j < i + m && cross_sign(rays[i], rays[j % m]) == 0) {
            throw_collinear(p, rays[i].target, rays[j % m].target);
        }
    }
    return partners;
}

}  // namespace

Geograph halving_edges_oracle(const Config& c) {
    check_preconditions(c);
    const std::size_t n = c.size();
    const std::size_t want = (n - 2) / 2;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const RPoint d = c[j] - c[i];
            if (d.x.is_zero() && d.y.is_zero()) {
                throw NotGeneralPositionError({i, j, j}, "duplicate points");
            }
            std::size_t left = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const int s = cross(d, c[k] - c[i]).sign();
                if (s == 0) throw_collinear(i, j, k);
                if (s > 0) ++left;
            }
            if (left == want) edges.emplace_back(i, j);
        }
    }
    Geograph g(c, std::move(edges));
    check_halving_invariants(g);
    return g;
}

Geograph halving_edges_sweep(const Config& c, unsigned threads) {
    check_preconditions(c);
    const std::size_t n = c.size();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (n < 64) threads = 1;
    std::vector<std::vector<std::size_t>> partners(n);
    if (threads == 1) {
        for (std::size_t p = 0; p < n; ++p) partners[p] = sweep_pivot(c, p);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t p = t; p < n; p += threads) partners[p] = sweep_pivot(c, p);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q : partners[p]) edges.emplace_back(p, q);
    }
    Geograph g(c, std::move(edges));
    check_halving_invariants(g);
    return g;
}

Geograph halving_edges(const Config& c, HalvingAlgo algo) {
    switch (algo) {
        case HalvingAlgo::Oracle: return halving_edges_oracle(c);
        case HalvingAlgo::Sweep: return halving_edges_sweep(c);
        case HalvingAlgo::Checked: break;
    }
    Geograph fast = halving_edges_sweep(c);
    Geograph slow = halving_edges_oracle(c);
    if (fast.edges() != slow.edges()) {
        throw Error(ErrorKind::InvariantViolation, "sweep and oracle edge sets differ");
    }
    return fast;
}

void check_halving_invariants(const Geograph& g) {
    const std::size_t n = g.size();
    if (n % 2 != 0) throw Error(ErrorKind::InvariantViolation, "odd point count");
    if (g.edges().size() < n / 2) {
        throw Error(ErrorKind::InvariantViolation,
                    "fewer than n/2 halving edges (" + std::to_string(g.edges().size()) + ")");
    }
    for (std::size_t d : degrees(g)) {
        if (d % 2 == 0) throw Error(ErrorKind::InvariantViolation, "vertex of even degree");
    }
}

std::vector<std::size_t> degrees(const Geograph& g) {
    std::vector<std::size_t> deg(g.size(), 0);
    for (const auto& [i, j] : g.edges()) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

std::vector<std::size_t> degree_sequence(const Geograph& g) {
    auto deg = degrees(g);
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace kfission
