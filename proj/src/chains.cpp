#include "kfission/chains.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace kfission {

namespace {

// Points sorted by dot(p, axis); nullopt on ties.
std::optional<std::vector<std::size_t>> order_along(const Config& c, const RPoint& axis) {
    std::vector<Rational> key(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) key[i] = dot(c[i], axis);
    std::vector<std::size_t> idx(c.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        if (key[idx[i]] == key[idx[i + 1]]) return std::nullopt;
    }
    return idx;
}

[[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::InvariantViolation, "chain construction: " + what);
}

// sense = +1: start from the half that is low along rot_cw(up) and rotate
// clockwise. sense = -1: mirrored, low along rot_ccw(up), counterclockwise.
std::vector<Chain> build(const Geograph& g, const Direction& up, int sense, StartOrder order) {
    const Config& c = g.config();
    const RPoint u = up.vec();
    const RPoint axis = sense > 0 ? rot_cw(u) : rot_ccw(u);
    const auto sorted = order_along(c, axis);
    if (!sorted) fail("frame has ties along the axis");
    std::vector<std::size_t> starts(sorted->begin(), sorted->begin() + c.size() / 2);
    if (order == StartOrder::Decreasing) std::reverse(starts.begin(), starts.end());

    const auto adj = g.adjacency();
    // e1 comes before e2 in the rotation.
    auto before = [sense](const RPoint& e1, const RPoint& e2) { return sense * cross(e1, e2).sign() < 0; };

    std::vector<Chain> chains;
    for (std::size_t start : starts) {
        Chain chain;
        std::size_t pivot = start;
        RPoint current = u;
        for (;;) {
            std::optional<std::size_t> best;
            RPoint best_dir;
            for (std::size_t x : adj[pivot]) {
                RPoint e = c[x] - c[pivot];
                const int side = dot(e, axis).sign();
                if (side == 0) fail("edge parallel to up");
                if (side < 0) e = {-e.x, -e.y};
                if (!before(current, e)) continue;
                if (!best || before(e, best_dir)) {
                    best = x;
                    best_dir = e;
                }
            }
            if (!best) break;
            if (dot(c[*best] - c[pivot], axis).sign() <= 0) {
                fail("next chain vertex lies behind the pivot");
            }
            chain.emplace_back(pivot, *best);
            current = best_dir;
            pivot = *best;
            if (chain.size() > g.edges().size()) fail("chain does not terminate");
        }
        if (chain.empty()) fail("vertex " + std::to_string(start) + " starts an empty chain");
        chains.push_back(std::move(chain));
    }
    return chains;
}

void check_decomposition(const Geograph& g, const ChainDecomposition& d, const RPoint& axis) {
    const std::size_t n = g.size();
    if (d.chains.size() != n / 2) fail("chain count is not n/2");
    std::vector<int> used(g.edges().size(), 0);
    std::vector<int> endpoint(n, 0);
    std::vector<bool> in_left(n, false);
    for (std::size_t v : d.frame.left_half) in_left[v] = true;
    for (const Chain& chain : d.chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto [a, b] = chain[i];
            const auto it = std::lower_bound(g.edges().begin(), g.edges().end(),
                                             Edge{std::min(a, b), std::max(a, b)});
            if (it == g.edges().end() || *it != Edge{std::min(a, b), std::max(a, b)}) {
                fail("chain uses a non-edge");
            }
            ++used[static_cast<std::size_t>(it - g.edges().begin())];
            if (i > 0) {
                if (chain[i - 1].second != a) fail("consecutive edges do not share a vertex");
                const RPoint e1 = g.config()[chain[i - 1].second] - g.config()[chain[i - 1].first];
                const RPoint e2 = g.config()[b] - g.config()[a];
                if (cross(e1, e2).sign() >= 0) fail("chain does not turn clockwise");
            }
            if (dot(g.config()[b] - g.config()[a], axis).sign() <= 0) fail("chain is not left to right");
        }
        const std::size_t first = chain.front().first;
        const std::size_t last = chain.back().second;
        if (!in_left[first]) fail("chain starts in the right half");
        if (in_left[last]) fail("chain ends in the left half");
        ++endpoint[first];
        ++endpoint[last];
    }
    for (int u : used) {
        if (u != 1) fail("edges are not partitioned by the chains");
    }
    for (int e : endpoint) {
        if (e != 1) fail("a vertex is not the endpoint of exactly one chain");
    }
}

std::vector<std::vector<Edge>> canonical(std::vector<Chain> chains) {
    std::sort(chains.begin(), chains.end());
    return chains;
}

}  // namespace

std::optional<SweepFrame> try_frame(const Config& c, const Direction& up) {
    const auto sorted = order_along(c, rot_cw(up.vec()));
    if (!sorted) return std::nullopt;
    SweepFrame f;
    f.up = up;
    const auto mid = sorted->begin() + static_cast<std::ptrdiff_t>(c.size() / 2);
    f.left_half.assign(sorted->begin(), mid);
    f.right_half.assign(mid, sorted->end());
    return f;
}

Direction up_candidate(std::size_t index) {
    if (index == 0) return Direction(0, 1);
    return Direction(1, static_cast<long>(index));
}

SweepFrame choose_generic_up(const Geograph& g) {
    // Only finitely many directions are parallel to a point pair, so the
    // schedule always terminates.
    for (std::size_t i = 0;; ++i) {
        if (auto f = try_frame(g.config(), up_candidate(i))) return *f;
    }
}

std::vector<std::size_t> ChainDecomposition::vertices(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : chains[i]) {
        if (out.empty()) out.push_back(a);
        out.push_back(b);
    }
    return out;
}

ChainDecomposition decompose_chains(const Geograph& g, const SweepFrame& frame, StartOrder order) {
    ChainDecomposition d;
    d.frame = frame;
    d.chains = build(g, frame.up, +1, order);
    check_decomposition(g, d, frame.axis());
    return d;
}

bool verify_chain_reversibility(const Geograph& g, const SweepFrame& frame) {
    const auto forward = build(g, frame.up, +1, StartOrder::Increasing);
    auto mirrored = build(g, frame.up, -1, StartOrder::Increasing);
    for (Chain& chain : mirrored) {
        std::reverse(chain.begin(), chain.end());
        for (auto& [a, b] : chain) std::swap(a, b);
    }
    return canonical(forward) == canonical(mirrored);
}

}  // namespace kfission
