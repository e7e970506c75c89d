#include "kfission/fission.h"

#include "kfission/builders.h"
#include "kfission/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kfission {

namespace {

[[noreturn]] void plan_fail(const std::string& what) {
    throw Error(ErrorKind::PlanInvariantViolation, what);
}

Rational pow2_at_least(const Rational& x) {
    if (x.sign() <= 0) return 1;
    const int e = x.floor_log2();
    return Rational::pow2(e) < x ? Rational::pow2(e + 1) : Rational::pow2(e);
}

RPoint rotate(const Direction& d, const RPoint& p) {
    return {d.dx() * p.x - d.dy() * p.y, d.dy() * p.x + d.dx() * p.y};
}

std::size_t new_index(std::size_t v, std::size_t rank, std::size_t n) { return v + rank * n; }

// Every chord direction avoids the eps-corridor of every base point pair.
bool chords_free(const Config& base, const Rational& eps, const std::vector<Direction>& chords) {
    for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t b = a + 1; b < base.size(); ++b) {
            for (const Direction& d : chords) {
                if (corridor_contains(base[a], base[b], eps, d)) return false;
            }
        }
    }
    return true;
}

std::vector<Direction> chord_directions(const ClusterTemplate& t, const Direction& rot) {
    std::vector<Direction> out;
    for (std::size_t i = 0; i < t.k(); ++i) {
        for (std::size_t j = i + 1; j < t.k(); ++j) out.emplace_back(rotate(rot, t.points[j] - t.points[i]));
    }
    return out;
}

// Scale putting the rotated template inside the eps/2 disk (L1 bound).
Rational half_disk_scale(const ClusterTemplate& t, const Direction& rot, const Rational& eps) {
    Rational m = 0;
    for (const RPoint& p : t.points) m = std::max(m, norm1(rotate(rot, p)));
    if (m.is_zero()) return 1;
    return eps / (Rational(2) * m);
}

ClusterTemplate arc_template(std::size_t k) {
    ClusterTemplate t;
    RPoint sum{0, 0};
    for (std::size_t j = 0; j < k; ++j) {
        t.points.push_back(circle_point(Rational(static_cast<long>(j), 16 * static_cast<long>(k))));
        sum = sum + t.points.back();
    }
    const Rational inv = Rational(1) / Rational(static_cast<long>(k));
    for (RPoint& p : t.points) p = p - inv * sum;
    return t;
}

FissionPlan uniform_plan(const Geograph& g, const ClusterTemplate& t, const Rational& eps,
                         std::span<const Direction> rotations) {
    FissionPlan plan;
    plan.base = g;
    plan.eps = eps;
    for (std::size_t v = 0; v < g.size(); ++v) {
        plan.templates.push_back(t);
        plan.rotation.push_back(rotations[v]);
        plan.scale.push_back(half_disk_scale(t, rotations[v], eps));
    }
    return plan;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

void require_plain(const FissionResult& r) {
    require(is_plain(r), "plain fission produced a non-traversing edge");
}

// Vertices on the cycles of a 1-forest.
std::vector<std::size_t> cycle_vertices(const AbstractGraph& g) {
    const auto out = functional_orientation(g);
    std::set<std::size_t> on_cycle;
    for (std::size_t v = 0; v < out.size(); ++v) {
        std::size_t x = v;
        for (std::size_t s = 0; s < out.size(); ++s) x = out[x];
        on_cycle.insert(x);
    }
    return {on_cycle.begin(), on_cycle.end()};
}

}  // namespace

RPoint place(const RPoint& vertex, const Rational& scale, const Direction& rotation, const RPoint& local) {
    return vertex + scale * rotate(rotation, local);
}

bool separation_certified(const Config& c, const Rational& eps) {
    const Rational four_eps2 = Rational(4) * eps * eps;
    const Rational two_eps = Rational(2) * eps;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const RPoint b = c[j] - c[i];
            const Rational nb = norm1(b);
            for (std::size_t p = 0; p < c.size(); ++p) {
                if (p == i || p == j) continue;
                const RPoint q = c[p] - c[i];
                if (cross(b, q).abs() <= two_eps * (nb + norm1(q)) + four_eps2) return false;
            }
        }
    }
    return true;
}

Rational safe_epsilon(const Geograph& g) {
    const Config& c = g.config();
    if (c.size() < 2) throw Error(ErrorKind::OddPointCount, "safe_epsilon needs at least two points");
    const Rational d2 = min_pairwise_dist2(std::span<const RPoint>(c.points()));
    Rational eps = 1;
    while (Rational(16) * eps * eps >= d2) eps /= Rational(2);
    while (Rational(64) * eps * eps < d2) eps *= Rational(2);
    while (!separation_certified(c, eps)) eps /= Rational(2);
    return eps;
}

void validate_plan(const FissionPlan& plan) {
    const Config& c = plan.base.config();
    const std::size_t n = c.size();
    if (plan.templates.size() != n || plan.rotation.size() != n || plan.scale.size() != n) {
        plan_fail("per-vertex data does not match the base size");
    }
    if (n == 0) plan_fail("empty base");
    const std::size_t k = plan.templates[0].k();
    if (k == 0) plan_fail("empty cluster template");
    if (plan.eps.sign() <= 0) plan_fail("eps must be positive");
    if (n >= 2) {
        if (Rational(16) * plan.eps * plan.eps >= min_pairwise_dist2(std::span<const RPoint>(c.points()))) {
            plan_fail("eps is not below a quarter of the minimum distance");
        }
        if (!separation_certified(c, plan.eps)) plan_fail("eps fails the separation certificate");
    }
    const Rational eps2 = plan.eps * plan.eps;
    for (std::size_t v = 0; v < n; ++v) {
        if (plan.templates[v].k() != k) plan_fail("templates differ in size");
        if (plan.scale[v].sign() <= 0) plan_fail("scale must be positive");
        for (const RPoint& p : plan.templates[v].points) {
            if (norm2(plan.scale[v] * rotate(plan.rotation[v], p)) >= eps2) {
                plan_fail("cluster of vertex " + std::to_string(v) + " leaves its eps-disk");
            }
        }
    }
}

FissionResult fission(const FissionPlan& plan, bool verify) {
    validate_plan(plan);
    const std::size_t n = plan.base.size();
    const std::size_t k = plan.templates[0].k();
    std::vector<RPoint> pts(n * k);
    std::vector<Origin> origin(n * k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t i = new_index(v, r, n);
            pts[i] = place(plan.base.config()[v], plan.scale[v], plan.rotation[v], plan.templates[v].points[r]);
            origin[i] = {v, r};
        }
    }
    FissionResult res;
    res.base = plan.base;
    res.k = k;
    res.eps = plan.eps;
    res.config = Config(std::move(pts));
    res.origin = std::move(origin);
    res.geograph = halving_edges(res.config, validation_algo(res.config.size()));
    if (verify) {
        const FissionReport report = verify_fission(res);
        if (const CheckResult* f = report.first_failure()) {
            throw Error(ErrorKind::InvariantViolation, "fission lemma '" + f->name + "' failed: " + f->detail);
        }
    }
    return res;
}

FissionResult identity_fission(const Geograph& g) {
    FissionPlan plan;
    plan.base = g;
    plan.eps = safe_epsilon(g);
    plan.templates.assign(g.size(), ClusterTemplate{{{0, 0}}});
    plan.rotation.assign(g.size(), Direction(1, 0));
    plan.scale.assign(g.size(), Rational(1));
    return fission(plan);
}

namespace {

// Non-traversing edge direction lies in the corridor of a base edge at v.
bool in_incident_corridor(const FissionResult& r, const Edge& e, std::size_t v) {
    const Config& b = r.base.config();
    const Direction d(r.config[e.second] - r.config[e.first]);
    for (const Edge& be : r.base.edges()) {
        if (be.first != v && be.second != v) continue;
        if (corridor_contains(b[be.first], b[be.second], r.eps, d)) return true;
    }
    return false;
}

EdgeClasses split_edges(const FissionResult& r) {
    EdgeClasses out;
    for (const Edge& e : r.geograph.edges()) {
        if (r.origin[e.first].base == r.origin[e.second].base) {
            out.non_traversing.push_back(e);
        } else {
            out.traversing.push_back(e);
        }
    }
    return out;
}

}  // namespace

EdgeClasses classify_edges(const FissionResult& r) {
    EdgeClasses out = split_edges(r);
    for (const Edge& e : out.non_traversing) {
        require(in_incident_corridor(r, e, r.origin[e.first].base),
                "non-traversing edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                    ") escapes every incident corridor");
    }
    return out;
}

bool is_plain(const FissionResult& r) {
    const bool by_count = r.geograph.edges().size() == r.k * r.base.edges().size();
    const bool by_class = split_edges(r).non_traversing.empty();
    require(by_count == by_class, "plainness tests disagree");
    return by_count;
}

bool FissionReport::ok() const { return first_failure() == nullptr; }

const CheckResult* FissionReport::first_failure() const {
    for (const CheckResult& c : checks) {
        if (!c.ok) return &c;
    }
    return nullptr;
}

FissionReport verify_fission(const FissionResult& r) {
    FissionReport rep;
    auto add = [&rep](std::string name, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const std::size_t n = r.base.size();
    const std::size_t k = r.k;

    bool layout = r.config.size() == k * n && r.origin.size() == k * n && r.geograph.size() == k * n;
    for (std::size_t i = 0; layout && i < r.origin.size(); ++i) {
        layout = r.origin[i] == Origin{i % n, i / n};
    }
    add("cluster-size", layout, layout ? "" : "point count or origin layout is not k|G|");
    if (!layout) return rep;

    const EdgeClasses cls = split_edges(r);
    std::map<Edge, std::vector<Edge>> per_base;
    std::size_t stray = 0;
    for (const Edge& e : cls.traversing) {
        const std::size_t a = r.origin[e.first].base;
        const std::size_t b = r.origin[e.second].base;
        const Edge be{std::min(a, b), std::max(a, b)};
        if (!r.base.has_edge(be.first, be.second)) {
            ++stray;
        } else {
            per_base[be].push_back(e);
        }
    }
    add("no-nonadjacent-traversing", stray == 0, std::to_string(stray) + " edges between non-adjacent clusters");

    bool k_each = true;
    std::string k_detail;
    for (const Edge& be : r.base.edges()) {
        const std::size_t got = per_base.count(be) ? per_base[be].size() : 0;
        if (got != k) {
            k_each = false;
            k_detail = "base edge (" + std::to_string(be.first) + "," + std::to_string(be.second) + ") has " +
                       std::to_string(got) + " traversing edges";
            break;
        }
    }
    add("k-traversing-per-edge", k_each, k_detail);

    // Traversing edges between two clusters equal the traversing halving
    // edges of the 2k points of those clusters alone.
    bool sub_ok = true;
    std::string sub_detail;
    for (const Edge& be : r.base.edges()) {
        std::vector<std::size_t> ids;
        for (std::size_t rk = 0; rk < k; ++rk) ids.push_back(new_index(be.first, rk, n));
        for (std::size_t rk = 0; rk < k; ++rk) ids.push_back(new_index(be.second, rk, n));
        std::vector<RPoint> sub;
        for (std::size_t id : ids) sub.push_back(r.config[id]);
        const Geograph local = halving_edges(Config::unchecked(std::move(sub)), validation_algo(2 * k));
        std::vector<Edge> expect;
        for (const auto& [a, b] : local.edges()) {
            if ((a < k) == (b < k)) continue;
            expect.emplace_back(std::min(ids[a], ids[b]), std::max(ids[a], ids[b]));
        }
        std::vector<Edge> got = per_base.count(be) ? per_base[be] : std::vector<Edge>{};
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got) {
            sub_ok = false;
            sub_detail = "base edge (" + std::to_string(be.first) + "," + std::to_string(be.second) + ")";
            break;
        }
    }
    add("2k-subconfiguration", sub_ok, sub_detail);

    std::size_t escaped = 0;
    for (const Edge& e : cls.non_traversing) {
        if (!in_incident_corridor(r, e, r.origin[e.first].base)) ++escaped;
    }
    add("non-traversing-in-corridor", escaped == 0, std::to_string(escaped) + " edges outside every corridor");

    const bool by_count = r.geograph.edges().size() == k * r.base.edges().size();
    const bool plain = cls.non_traversing.empty();
    add("plain-tests-agree", by_count == plain);
    if (!plain) return rep;

    // Covering: the origin map is a bijection from N(x) onto N(origin(x)).
    const auto adj_h = r.geograph.adjacency();
    const auto adj_g = r.base.adjacency();
    bool covering = true;
    bool degree = true;
    for (std::size_t x = 0; x < adj_h.size() && covering; ++x) {
        const std::size_t v = r.origin[x].base;
        std::vector<std::size_t> img;
        for (std::size_t y : adj_h[x]) img.push_back(r.origin[y].base);
        std::sort(img.begin(), img.end());
        std::vector<std::size_t> want = adj_g[v];
        std::sort(want.begin(), want.end());
        covering = img == want;
        degree = degree && adj_h[x].size() == adj_g[v].size();
    }
    add("covering-map", covering);
    add("degree-preserved", degree);

    const AbstractGraph base_graph = AbstractGraph::of(r.base);
    if (connected_components(base_graph).size() == 1) {
        const auto comps = connected_components(AbstractGraph::of(r.geograph));
        bool balanced = true;
        bool multiple = true;
        for (const auto& comp : comps) {
            std::vector<std::size_t> hits(n, 0);
            for (std::size_t x : comp) ++hits[r.origin[x].base];
            balanced = balanced && std::all_of(hits.begin(), hits.end(), [&](std::size_t h) { return h == hits[0]; });
            multiple = multiple && comp.size() % n == 0;
        }
        add("components-meet-clusters-equally", balanced);
        add("component-size-multiple", multiple);
    }
    return rep;
}

FissionResult reconstruct_fission(const Geograph& base, const Geograph& h, const std::vector<Origin>& origin) {
    const std::size_t n = base.size();
    if (n == 0 || h.size() % n != 0 || origin.size() != h.size()) {
        throw Error(ErrorKind::InvariantViolation, "fission size is not a multiple of the base size");
    }
    FissionResult r;
    r.base = base;
    r.k = h.size() / n;
    r.config = h.config();
    r.origin = origin;
    r.geograph = h;
    Rational r2 = 0;
    for (std::size_t i = 0; i < origin.size(); ++i) {
        if (origin[i].base >= n) throw Error(ErrorKind::InvariantViolation, "origin names a missing base vertex");
        r2 = std::max(r2, norm2(h.config()[i] - base.config()[origin[i].base]));
    }
    if (r2.is_zero()) {
        r.eps = safe_epsilon(base);
    } else {
        Rational e = 1;
        while (e * e < r2) e *= Rational(2);
        while ((e / Rational(2)) * (e / Rational(2)) >= r2) e /= Rational(2);
        r.eps = e;
    }
    return r;
}

Direction rotation_candidate(std::size_t i) {
    static const std::vector<Direction> schedule = [] {
        std::vector<Direction> out;
        for (long m = 1; m <= 48; ++m) {
            std::vector<std::pair<long, long>> ring;
            for (long a = -m; a <= m; ++a) {
                for (long b = -m; b <= m; ++b) {
                    if (std::max(std::labs(a), std::labs(b)) == m && std::gcd(a, b) == 1) ring.emplace_back(a, b);
                }
            }
            for (const auto& [a, b] : ring) out.emplace_back(a, b);
        }
        return out;
    }();
    if (i >= schedule.size()) throw Error(ErrorKind::SearchExhausted, "rotation schedule exhausted");
    return schedule[i];
}

namespace {

constexpr std::size_t kRotationBudget = 256;
constexpr int kEpsRounds = 40;

FissionResult plain_from(const Geograph& g, std::size_t k, const Rational& eps,
                         std::span<const Direction> rotations, bool verify) {
    FissionResult r = fission(uniform_plan(g, arc_template(k), eps, rotations), verify);
    if (verify) require_plain(r);
    return r;
}

// First (eps, rotation) with every chord certified; eps halves per round.
std::pair<Rational, Direction> choose_plain_rotation(const Geograph& g, const ClusterTemplate& t) {
    Rational eps = safe_epsilon(g);
    for (int round = 0; round < kEpsRounds; ++round, eps /= Rational(2)) {
        for (std::size_t i = 0; i < kRotationBudget; ++i) {
            const Direction rot = rotation_candidate(i);
            if (chords_free(g.config(), eps, chord_directions(t, rot))) return {eps, rot};
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no corridor-free cluster rotation found");
}

}  // namespace

FissionResult plain_fission(const Geograph& g, std::size_t k, bool verify) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    if (k == 1) return identity_fission(g);
    const auto [eps, rot] = choose_plain_rotation(g, arc_template(k));
    const std::vector<Direction> rots(g.size(), rot);
    return plain_from(g, k, eps, rots, verify);
}

FissionResult plain_fission(const Geograph& g, std::size_t k, std::span<const Direction> rotations, bool verify) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    if (rotations.size() != g.size()) throw Error(ErrorKind::InvalidArgument, "need one rotation per vertex");
    const ClusterTemplate t = arc_template(k);
    Rational eps = safe_epsilon(g);
    for (int round = 0; round < kEpsRounds; ++round, eps /= Rational(2)) {
        const bool all_free = std::all_of(rotations.begin(), rotations.end(), [&](const Direction& rot) {
            return chords_free(g.config(), eps, chord_directions(t, rot));
        });
        if (all_free) return plain_from(g, k, eps, rotations, verify);
    }
    throw Error(ErrorKind::ConstructionFailed, "a given rotation is never corridor-free");
}

FissionResult parallel_fission(const Geograph& g, std::size_t k, bool verify) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    if (k == 1) return identity_fission(g);
    const long kk = static_cast<long>(k);
    Rational mean_sq = 0;
    std::vector<Rational> xs;
    for (long j = 0; j < kk; ++j) {
        xs.push_back(Rational(2 * j - kk + 1, 2));
        mean_sq += xs.back() * xs.back();
    }
    mean_sq /= Rational(kk);

    Rational eps = safe_epsilon(g);
    for (int round = 0; round < kEpsRounds; ++round, eps /= Rational(2)) {
        for (std::size_t i = 0; i < kRotationBudget; ++i) {
            const Direction rot = rotation_candidate(i);
            if (!chords_free(g.config(), eps, {rot})) continue;
            Rational rho(1, 16 * kk * kk);
            for (int h = 0; h < kEpsRounds; ++h, rho /= Rational(2)) {
                ClusterTemplate t;
                for (const Rational& x : xs) t.points.push_back({x, rho * (x * x - mean_sq)});
                if (!chords_free(g.config(), eps, chord_directions(t, rot))) continue;
                const std::vector<Direction> rots(g.size(), rot);
                FissionResult r = fission(uniform_plan(g, t, eps, rots), verify);
                if (verify) {
                    require_plain(r);
                    for (const Edge& e : r.geograph.edges()) {
                        require(r.origin[e.first].rank + r.origin[e.second].rank == k - 1,
                                "traversing edge does not join rank m to rank k-1-m");
                    }
                }
                return r;
            }
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no corridor-free parallel direction found");
}

FissionResult forest_fission(const Geograph& g, const Config& b, bool verify) {
    const AbstractGraph ag = AbstractGraph::of(g);
    if (!is_one_forest(ag)) throw Error(ErrorKind::NotOneForest, "forest fission needs a 1-forest base");
    const auto out = functional_orientation(ag);
    const Stick stick = make_stick(b);
    const Geograph gb = halving_edges(b, validation_algo(b.size()));
    const Rational eps = safe_epsilon(g);
    const Config& c = g.config();
    const std::size_t n = g.size();

    std::vector<RPoint> dir(n);
    for (std::size_t v = 0; v < n; ++v) dir[v] = c[out[v]] - c[v];

    // Lines of a cluster must pass through the middle gap of the cluster
    // they reach; this bounds the needed squeeze.
    Rational need = 1;
    for (std::size_t v = 0; v < n; ++v) {
        const RPoint& d = dir[v];
        const RPoint& dw = dir[out[v]];
        const Rational sin_lb = cross(d, dw).abs() / (norm1(d) * norm1(dw));
        const Rational f = Rational(64) * (norm1(d) * stick.max_slope + stick.max_eta) / (sin_lb * eps * stick.gap);
        need = std::max(need, f);
    }
    Rational squeeze = pow2_at_least(need);

    const std::size_t m = b.size();
    for (int attempt = 0; attempt < 6; ++attempt, squeeze *= Rational::pow2(8)) {
        ClusterTemplate t{stick.squeezed(squeeze)};
        const Rational max_eta = stick.max_eta / squeeze;
        FissionPlan plan;
        plan.base = g;
        plan.eps = eps;
        for (std::size_t v = 0; v < n; ++v) {
            const Direction rot(dir[v]);
            // dir[v] = lambda * rot with lambda > 0.
            const Rational lambda = norm1(dir[v]) / norm1(rot.vec());
            plan.templates.push_back(t);
            plan.rotation.push_back(rot);
            plan.scale.push_back(lambda * eps / (Rational(2) * (Rational(1) + max_eta) * norm1(dir[v])));
        }
        try {
            FissionResult r = fission(plan, verify);
            if (!verify) return r;
            const EdgeClasses cls = classify_edges(r);
            std::vector<std::vector<Edge>> inner(n);
            for (const Edge& e : cls.non_traversing) {
                const std::size_t a = r.origin[e.first].rank;
                const std::size_t bb = r.origin[e.second].rank;
                inner[r.origin[e.first].base].emplace_back(std::min(a, bb), std::max(a, bb));
            }
            for (auto& edges : inner) {
                std::sort(edges.begin(), edges.end());
                if (edges != gb.edges()) throw Error(ErrorKind::InvariantViolation, "cluster halving edges differ from B");
            }
            const std::size_t eg = g.edges().size();
            require(r.geograph.edges().size() == m * eg + eg * gb.edges().size(),
                    "forest fission edge count is not |B| e_G + e_G e_B");
            return r;
        } catch (const NotGeneralPositionError&) {
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvariantViolation) throw;
        }
    }
    throw Error(ErrorKind::InvariantViolation, "forest fission failed validation at every squeeze factor");
}

FissionResult g_sequence(std::size_t k, bool verify) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "g_sequence supports 1 <= k <= 3");
    const Geograph u = halving_edges(find_unicyclic6());
    FissionResult r = identity_fission(u);
    std::size_t vertices = 6;
    for (std::size_t i = 2; i <= k; ++i) {
        r = forest_fission(u, r.config, verify);
        vertices *= 6;
    }
    require(r.config.size() == vertices, "g(k) does not have 6^k vertices");
    require(r.geograph.edges().size() == k * vertices, "g(k) does not have k 6^k edges");
    return r;
}

bool chain_split_check(const Geograph& base, const FissionResult& r) {
    const std::size_t n = base.size();
    for (std::size_t i = 0; i < 4096; ++i) {
        const Direction up = up_candidate(i);
        const auto fb = try_frame(base.config(), up);
        const auto fh = try_frame(r.config, up);
        if (!fb || !fh) continue;
        std::vector<bool> left(n, false);
        for (std::size_t v : fb->left_half) left[v] = true;
        const bool halves_agree = std::all_of(fh->left_half.begin(), fh->left_half.end(),
                                              [&](std::size_t x) { return left[r.origin[x].base]; });
        if (!halves_agree) continue;

        const ChainDecomposition db = decompose_chains(base, *fb);
        const ChainDecomposition dh = decompose_chains(r.geograph, *fh);
        std::map<std::vector<std::size_t>, std::size_t> overlap;
        for (std::size_t c = 0; c < db.chains.size(); ++c) overlap[db.vertices(c)] = 0;
        for (std::size_t c = 0; c < dh.chains.size(); ++c) {
            std::vector<std::size_t> seq;
            for (std::size_t x : dh.vertices(c)) seq.push_back(r.origin[x].base);
            const auto it = overlap.find(seq);
            if (it == overlap.end()) return false;
            ++it->second;
        }
        return std::all_of(overlap.begin(), overlap.end(), [&](const auto& kv) { return kv.second == r.k; });
    }
    throw Error(ErrorKind::NoCommonFrame, "no up direction is generic for both configurations");
}

std::pair<FissionResult, FissionResult> divergent_plain_fissions(const Geograph& unicyclic) {
    const AbstractGraph ag = AbstractGraph::of(unicyclic);
    const std::vector<std::size_t> cycle = cycle_vertices(ag);
    const std::size_t n = unicyclic.size();
    const ClusterTemplate t = arc_template(2);
    const auto [eps, rot] = choose_plain_rotation(unicyclic, t);

    auto cycle_components = [&](const FissionResult& r) {
        std::vector<std::size_t> ids;
        for (std::size_t v : cycle) {
            for (std::size_t rk = 0; rk < 2; ++rk) ids.push_back(new_index(v, rk, n));
        }
        return connected_components(AbstractGraph::of(r.geograph).induced(ids)).size();
    };

    std::vector<Direction> rots(n, rot);
    FissionResult first = plain_from(unicyclic, 2, eps, rots, true);
    const std::size_t first_parts = cycle_components(first);
    for (std::size_t v : cycle) {
        for (std::size_t i = 0; i < kRotationBudget; ++i) {
            const Direction alt = rotation_candidate(i);
            if (!chords_free(unicyclic.config(), eps, chord_directions(t, alt))) continue;
            std::vector<Direction> mixed = rots;
            mixed[v] = alt;
            FissionResult second = plain_from(unicyclic, 2, eps, mixed, true);
            const std::size_t parts = cycle_components(second);
            if (parts == first_parts) continue;
            if (first_parts == 2) return {std::move(first), std::move(second)};
            return {std::move(second), std::move(first)};
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no rotation change alters the lifted cycle");
}

std::pair<FissionResult, FissionResult> two_path_exhibits() {
    const Geograph base = halving_edges(two_path());
    const Rational eps(1, 8);
    const ClusterTemplate aligned{{{-1, Rational(-1, 100)}, {1, Rational(1, 100)}}};
    const ClusterTemplate vertical{{{0, -1}, {0, 1}}};
    auto plan_with = [&](const ClusterTemplate& at_a) {
        FissionPlan p;
        p.base = base;
        p.eps = eps;
        p.templates = {at_a, vertical};
        p.rotation.assign(2, Direction(1, 0));
        p.scale.assign(2, eps / Rational(2));
        return p;
    };
    return {fission(plan_with(aligned)), fission(plan_with(vertical))};
}

}  // namespace kfission
