#include "kfission/defission.h"

#include "kfission/builders.h"
#include "kfission/graph.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kfission {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::DividesWitnessed: return "divides-witnessed";
        case Verdict::NecessaryConditionsFail: return "necessary-conditions-fail";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(Primitivity p) {
    switch (p) {
        case Primitivity::PrimitiveCertified: return "primitive-certified";
        case Primitivity::NotPrimitiveWitnessed: return "not-primitive-witnessed";
        case Primitivity::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

constexpr const char* kTwoPathReading =
    "2-path divides h (h is a fission of the 2-path)";

// A candidate 2-cluster layout: offsets of cluster A around (0,0) and of
// cluster B around (1,0), plus the h vertex behind each offset.
struct Layout {
    std::vector<RPoint> a_offsets, b_offsets;
    std::vector<std::size_t> a_vertices, b_vertices;
};

bool same_graph(const Geograph& h, const FissionResult& r, const std::vector<std::size_t>& map) {
    std::vector<Edge> mapped;
    for (const auto& [i, j] : h.edges()) mapped.emplace_back(std::min(map[i], map[j]), std::max(map[i], map[j]));
    std::sort(mapped.begin(), mapped.end());
    return mapped == r.geograph.edges();
}

// Builds the 2-path fission for a layout; nullopt when the placement is
// degenerate, unsafe, or realizes a different graph.
std::optional<DivisibilityReport> try_layout(const Geograph& h, const Layout& lay, const std::string& method) {
    const Geograph base = halving_edges(two_path());
    FissionPlan plan;
    plan.base = base;
    plan.eps = Rational(1, 8);
    plan.templates = {ClusterTemplate{lay.a_offsets}, ClusterTemplate{lay.b_offsets}};
    plan.rotation.assign(2, Direction(1, 0));
    plan.scale.assign(2, Rational(1));
    std::optional<FissionResult> r;
    try {
        r = fission(plan);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotGeneralPosition || e.kind() == ErrorKind::PlanInvariantViolation ||
            e.kind() == ErrorKind::InvariantViolation) {
            return std::nullopt;
        }
        throw;
    }
    std::vector<std::size_t> map(h.size());
    for (std::size_t t = 0; t < lay.a_vertices.size(); ++t) map[lay.a_vertices[t]] = 2 * t;
    for (std::size_t t = 0; t < lay.b_vertices.size(); ++t) map[lay.b_vertices[t]] = 2 * t + 1;
    if (!same_graph(h, *r, map)) return std::nullopt;
    DivisibilityReport rep;
    rep.divisor = "2-path";
    rep.verdict = Verdict::DividesWitnessed;
    rep.witness = std::move(r);
    rep.index_map = std::move(map);
    rep.detail = std::string(kTwoPathReading) + "; " + method;
    return rep;
}

// Local (x, y) of p in the frame whose x axis is `axis`.
RPoint in_frame(const RPoint& p, const RPoint& axis) { return {dot(p, axis), cross(axis, p)}; }

// Squeeze, then translate the two halves apart. Offsets are scaled into
// disks of radius below 1/8.
std::optional<DivisibilityReport> literal_pull_apart(const Geograph& h) {
    const Config& c = h.config();
    const std::size_t n = c.size();
    for (std::size_t a = 0; a < 8; ++a) {
        const RPoint axis = rot_cw(up_candidate(a).vec());
        std::vector<RPoint> loc;
        for (const RPoint& p : c.points()) loc.push_back(in_frame(p, axis));
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return loc[i].x < loc[j].x; });
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < n; ++i) distinct = distinct && loc[order[i]].x != loc[order[i + 1]].x;
        if (!distinct) continue;
        const Rational width = loc[order.back()].x - loc[order.front()].x;
        for (long squeeze : {1L, 1L << 10, 1L << 20}) {
            for (long pull : {16L, 64L, 256L}) {
                // Scale so the halves sit `pull` widths apart, then put the
                // left half at (0,0) and the right half at (1,0).
                const Rational span = Rational(pull + 1) * width;
                const RPoint left_center = {loc[order.front()].x, loc[order.front()].y};
                const RPoint right_center = {loc[order.back()].x, loc[order.front()].y};
                Layout lay;
                for (std::size_t t = 0; t < n; ++t) {
                    const std::size_t v = order[t];
                    const bool left = t < n / 2;
                    const RPoint off = left ? loc[v] - left_center : loc[v] - right_center;
                    const RPoint o = {off.x / span, off.y / (Rational(squeeze) * span)};
                    (left ? lay.a_offsets : lay.b_offsets).push_back(o);
                    (left ? lay.a_vertices : lay.b_vertices).push_back(v);
                }
                // Offsets must fit the 1/8 disk.
                Rational m = 0;
                for (const auto* offs : {&lay.a_offsets, &lay.b_offsets}) {
                    for (const RPoint& o : *offs) m = std::max(m, norm1(o));
                }
                if (m >= Rational(1, 8)) continue;
                if (auto rep = try_layout(h, lay, "literal pull-apart of a squeezed copy")) return rep;
            }
        }
    }
    return std::nullopt;
}

// Two-scale search for one partition (A, B) and one frame for A. B must be
// independent in h. In A's frame every B point acts as a slope s: B lies at
// infinity in direction (1, s). With m = |A| = |B|:
//  * pair (i, i') of A with slope S is halving iff
//      #A above + #{B : s > S} = m - 1;
//  * (i, b) is halving iff #A above the slope-s_b line through i
//      + #{B : s > s_b} = m - 1.
std::optional<DivisibilityReport> two_scale(const Geograph& h, const std::vector<std::size_t>& A,
                                            const std::vector<std::size_t>& B, const RPoint& axis) {
    const std::size_t m = A.size();
    const Config& c = h.config();
    std::vector<RPoint> alpha;
    for (std::size_t v : A) alpha.push_back(in_frame(c[v], axis));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (alpha[i].x == alpha[j].x) return std::nullopt;
        }
    }

    std::vector<Rational> crit;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            crit.push_back((alpha[j].y - alpha[i].y) / (alpha[j].x - alpha[i].x));
        }
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    const std::size_t cells = crit.size() + 1;

    auto cell_bounds = [&](std::size_t cell) -> std::pair<Rational, Rational> {
        const Rational lo = cell == 0 ? crit.front() - Rational(1) : crit[cell - 1];
        const Rational hi = cell == crit.size() ? crit.back() + Rational(1) : crit[cell];
        return {lo, hi};
    };
    auto above = [&](std::size_t i, const Rational& s, std::size_t skip) {
        std::size_t cnt = 0;
        for (std::size_t a = 0; a < m; ++a) {
            if (a == i || a == skip) continue;
            if (alpha[a].y > alpha[i].y + s * (alpha[a].x - alpha[i].x)) ++cnt;
        }
        return cnt;
    };

    // above_cell[i][cell]: A points above the line through i at a slope in cell.
    std::vector<std::vector<std::size_t>> above_cell(m, std::vector<std::size_t>(cells));
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const auto [lo, hi] = cell_bounds(cell);
        const Rational mid = (lo + hi) / Rational(2);
        for (std::size_t i = 0; i < m; ++i) above_cell[i][cell] = above(i, mid, i);
    }
    struct PairRule {
        std::size_t a_above;
        std::size_t crit_index;
        bool edge;
    };
    std::vector<PairRule> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Rational s = (alpha[j].y - alpha[i].y) / (alpha[j].x - alpha[i].x);
            const auto q = static_cast<std::size_t>(std::lower_bound(crit.begin(), crit.end(), s) - crit.begin());
            pairs.push_back({above(i, s, j), q, h.has_edge(A[i], A[j])});
        }
    }

    // Neighbourhood of each B vertex as a bitmask over A positions.
    std::map<std::vector<bool>, std::vector<std::size_t>> want;
    for (std::size_t b : B) {
        std::vector<bool> mask(m);
        for (std::size_t i = 0; i < m; ++i) mask[i] = h.has_edge(A[i], b);
        want[mask].push_back(b);
    }

    std::vector<std::size_t> cell_of(m);
    std::vector<std::size_t> b_at(m);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t t, std::size_t max_cell) -> bool {
        if (t == m) {
            for (const PairRule& p : pairs) {
                std::size_t b_above = 0;
                for (std::size_t u = 0; u < m; ++u) b_above += cell_of[u] > p.crit_index ? 1 : 0;
                if ((p.a_above + b_above == m - 1) != p.edge) return false;
            }
            return true;
        }
        for (std::size_t cell = max_cell + 1; cell-- > 0;) {
            std::vector<bool> mask(m);
            for (std::size_t i = 0; i < m; ++i) mask[i] = above_cell[i][cell] + t == m - 1;
            auto it = want.find(mask);
            if (it == want.end() || it->second.empty()) continue;
            cell_of[t] = cell;
            b_at[t] = it->second.back();
            it->second.pop_back();
            if (search(t + 1, cell)) return true;
            it->second.push_back(b_at[t]);
        }
        return false;
    };
    if (!search(0, cells - 1)) return std::nullopt;

    // Distinct slopes, decreasing with t, inside the chosen cells.
    std::vector<Rational> s(m);
    for (std::size_t t = 0; t < m;) {
        std::size_t e = t;
        while (e < m && cell_of[e] == cell_of[t]) ++e;
        const auto [lo, hi] = cell_bounds(cell_of[t]);
        const auto cnt = static_cast<long>(e - t);
        for (std::size_t u = t; u < e; ++u) {
            s[u] = lo + (hi - lo) * Rational(cnt - static_cast<long>(u - t), cnt + 1);
        }
        t = e;
    }

    RPoint mean{0, 0};
    for (const RPoint& p : alpha) mean = mean + p;
    mean = Rational(1) / Rational(static_cast<long>(m)) * mean;
    Rational spread = 0;
    for (RPoint& p : alpha) {
        p = p - mean;
        spread = std::max({spread, p.x.abs(), p.y.abs()});
    }
    if (!spread.is_zero()) {
        for (RPoint& p : alpha) p = Rational(1) / spread * p;
    }
    Rational reach = 1;
    for (std::size_t t = 0; t < m; ++t) reach = std::max(reach, s[t].abs() + Rational(static_cast<long>(t * t)));
    Rational eps = 1;
    while (Rational(16) * reach * eps >= Rational(1)) eps /= Rational(2);

    for (int round = 0; round < 24; ++round, eps /= Rational(2)) {
        const Rational delta = eps * eps;
        Layout lay;
        lay.a_vertices = A;
        for (const RPoint& p : alpha) lay.a_offsets.push_back({delta * p.x, delta * eps * p.y});
        for (std::size_t t = 0; t < m; ++t) {
            lay.b_offsets.push_back({eps * Rational(static_cast<long>(t * t)), eps * s[t]});
            lay.b_vertices.push_back(b_at[t]);
        }
        if (auto rep = try_layout(h, lay, "two-scale placement (flat cluster and slope cluster)")) return rep;
    }
    return std::nullopt;
}

bool independent(const Geograph& h, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (h.has_edge(set[i], set[j])) return false;
        }
    }
    return true;
}

std::optional<DivisibilityReport> two_scale_any(const Geograph& h, const std::vector<std::size_t>& A,
                                                const std::vector<std::size_t>& B) {
    if (!independent(h, B)) return std::nullopt;
    for (std::size_t r = 0; r < 24; ++r) {
        if (auto rep = two_scale(h, A, B, rotation_candidate(r).vec())) return rep;
    }
    return std::nullopt;
}

}  // namespace

DivisibilityReport two_path_divides(const Geograph& h) {
    const std::size_t n = h.size();
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::OddPointCount, "two_path_divides needs an even point count");
    if (n == 2) {
        DivisibilityReport rep;
        rep.divisor = "2-path";
        rep.verdict = Verdict::DividesWitnessed;
        rep.witness = identity_fission(h);
        rep.index_map = {0, 1};
        rep.detail = std::string(kTwoPathReading) + "; 1-fission";
        return rep;
    }
    if (auto rep = literal_pull_apart(h)) return *rep;

    // Halves along the frame schedule first, then (small n) every split.
    const std::size_t m = n / 2;
    for (std::size_t a = 0; a < 8; ++a) {
        const auto frame = try_frame(h.config(), up_candidate(a));
        if (!frame) continue;
        if (auto rep = two_scale_any(h, frame->left_half, frame->right_half)) return *rep;
        if (auto rep = two_scale_any(h, frame->right_half, frame->left_half)) return *rep;
    }
    if (n <= 12) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), true);
        do {
            std::vector<std::size_t> A, B;
            for (std::size_t v = 0; v < n; ++v) (pick[v] ? B : A).push_back(v);
            if (auto rep = two_scale_any(h, A, B)) return *rep;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    throw Error(ErrorKind::ConstructionFailed, "no 2-path fission realizes this geograph");
}

DivisibilityReport divisibility_necessary(const Geograph& h, std::size_t g_size, std::size_t k) {
    if (g_size * k != h.size()) {
        throw Error(ErrorKind::ArithmeticMismatch, "g_size * k must equal |h|");
    }
    DivisibilityReport rep;
    rep.divisor = "connected geograph on " + std::to_string(g_size) + " points, k = " + std::to_string(k);
    if (g_size < 2 || g_size % 2 != 0) {
        rep.verdict = Verdict::NecessaryConditionsFail;
        rep.detail = "size: a halving geograph needs an even number of at least 2 points";
        return rep;
    }
    for (const auto& comp : connected_components(AbstractGraph::of(h))) {
        if (comp.size() % g_size != 0) {
            rep.verdict = Verdict::NecessaryConditionsFail;
            rep.detail = "component-multiple: a component of size " + std::to_string(comp.size()) +
                         " is not a multiple of " + std::to_string(g_size);
            return rep;
        }
    }
    rep.verdict = Verdict::Unknown;
    rep.detail = "necessary conditions hold";
    return rep;
}

namespace {

// Partitions of `total` into even parts >= 2, non-increasing.
void even_partitions(std::size_t total, std::size_t max_part, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(total, max_part); p >= 2; p -= 2) {
        cur.push_back(p);
        even_partitions(total - p, p, cur, out);
        cur.pop_back();
        if (p < 4) break;
    }
}

// Can h's components be grouped so the group for part c sums to k*c and
// every component in it is a multiple of c?
bool groups_exist(const std::vector<std::size_t>& comps, const std::vector<std::size_t>& parts, std::size_t k) {
    std::vector<std::size_t> room(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) room[i] = k * parts[i];
    std::function<bool(std::size_t)> place = [&](std::size_t ci) -> bool {
        if (ci == comps.size()) return std::all_of(room.begin(), room.end(), [](std::size_t r) { return r == 0; });
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (comps[ci] % parts[i] != 0 || room[i] < comps[ci]) continue;
            room[i] -= comps[ci];
            if (place(ci + 1)) return true;
            room[i] += comps[ci];
        }
        return false;
    };
    return place(0);
}

}  // namespace

PrimitivityReport primitivity_certificate(const Geograph& h, const FissionResult* witness) {
    const std::size_t n = h.size();
    if (n > 12) throw Error(ErrorKind::TooLarge, "primitivity certificates are limited to 12 points");
    PrimitivityReport rep;
    if (witness != nullptr && witness->k >= 2 && witness->base.size() > 2 && witness->geograph == h) {
        rep.verdict = Primitivity::NotPrimitiveWitnessed;
        rep.reasons.push_back("witness: " + std::to_string(witness->k) + "-fission of a " +
                              std::to_string(witness->base.size()) + "-point geograph");
        return rep;
    }
    std::vector<std::size_t> comps;
    for (const auto& comp : connected_components(AbstractGraph::of(h))) comps.push_back(comp.size());

    bool all_refuted = true;
    for (std::size_t g_size = 3; g_size < n; ++g_size) {
        if (n % g_size != 0) continue;
        const std::size_t k = n / g_size;
        const std::string tag = "g_size " + std::to_string(g_size) + ", k " + std::to_string(k) + ": ";
        const DivisibilityReport conn = divisibility_necessary(h, g_size, k);
        if (conn.verdict != Verdict::NecessaryConditionsFail) {
            all_refuted = false;
            rep.reasons.push_back(tag + "connected divisor not refuted");
            continue;
        }
        if (g_size % 2 != 0) {
            rep.reasons.push_back(tag + conn.detail);
            continue;
        }
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cur;
        even_partitions(g_size, g_size, cur, parts);
        bool disconnected_ok = false;
        for (const auto& p : parts) {
            if (p.size() < 2) continue;
            if (groups_exist(comps, p, k)) {
                disconnected_ok = true;
                break;
            }
        }
        if (disconnected_ok) {
            all_refuted = false;
            rep.reasons.push_back(tag + "disconnected divisor not refuted");
        } else {
            rep.reasons.push_back(tag + conn.detail + "; no grouping of components fits a disconnected divisor");
        }
    }
    rep.verdict = all_refuted ? Primitivity::PrimitiveCertified : Primitivity::Unknown;
    return rep;
}

}  // namespace kfission
