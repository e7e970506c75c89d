#include "kfission/builders.h"

#include "kfission/chains.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace kfission {

RPoint circle_point(const Rational& t) {
    const Rational t2 = t * t;
    const Rational d = Rational(1) + t2;
    return {(Rational(1) - t2) / d, Rational(2) * t / d};
}

Config convex_polygon(std::size_t n, std::span<const Rational> params) {
    if (n % 2 != 0) throw Error(ErrorKind::OddPointCount, "polygon needs even n, got " + std::to_string(n));
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "polygon needs n >= 4");
    if (params.size() != n) throw Error(ErrorKind::InvalidArgument, "need exactly n parameters");
    std::set<Rational> seen(params.begin(), params.end());
    if (seen.size() != n) throw Error(ErrorKind::DuplicateParam, "polygon parameters must be distinct");
    std::vector<RPoint> pts;
    pts.reserve(n);
    for (const Rational& t : params) pts.push_back(circle_point(t));
    return Config(std::move(pts));
}

std::vector<Rational> default_polygon_params(std::size_t n) {
    std::vector<Rational> t;
    for (std::size_t j = 0; j < n; ++j) {
        t.push_back(Rational(2 * static_cast<long>(j) - static_cast<long>(n) + 1, 2));
    }
    return t;
}

Config convex_polygon(std::size_t n) {
    const auto t = default_polygon_params(n);
    return convex_polygon(n, t);
}

namespace {

bool is_star(const Geograph& g) {
    const std::size_t n = g.size();
    const auto deg = degrees(g);
    if (deg[n - 1] != n - 1) return false;
    return std::all_of(deg.begin(), deg.end() - 1, [](std::size_t d) { return d == 1; });
}

// Nearest rational with denominator den.
Rational round_to(double x, long den) {
    return Rational(std::lround(x * static_cast<double>(den)), den);
}

}  // namespace

Config star_config(std::size_t n) {
    if (n % 2 != 0) throw Error(ErrorKind::OddPointCount, "star needs even n, got " + std::to_string(n));
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "star needs n >= 4");
    const std::size_t m = n - 1;
    // Doubles only pick parameters; the result is validated exactly.
    for (int attempt = 0; attempt < 6; ++attempt) {
        const long den = 1L << (8 + 4 * attempt);
        std::vector<RPoint> pts;
        for (std::size_t j = 0; j < m; ++j) {
            const double half = std::numbers::pi * (static_cast<double>(j) + 0.25) / static_cast<double>(m);
            pts.push_back(circle_point(round_to(std::tan(half), den)));
        }
        pts.push_back({0, 0});
        if (!is_general_position(std::span<const RPoint>(pts)).ok) continue;
        Config c(std::move(pts));
        if (is_star(halving_edges(c, validation_algo(n)))) return c;
    }
    throw Error(ErrorKind::ConstructionFailed, "star_config retry budget exhausted");
}

Config two_path() { return Config({{0, 0}, {1, 0}}); }

Config segmentarize(const Config& c, const Rational& factor) {
    if (factor.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "squeeze factor must be positive");
    if (c.size() < 2) return c;
    std::size_t bi = 0, bj = 1;
    Rational best = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const Rational d = norm2(c[j] - c[i]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    const RPoint r = c[bj] - c[bi];
    const RPoint o = c[bi];
    // x' = dot(r, p - o), y' = cross(r, p - o) / factor.
    AffineMap m;
    m.a11 = r.x;
    m.a12 = r.y;
    m.a21 = -r.y / factor;
    m.a22 = r.x / factor;
    m.tx = -(r.x * o.x + r.y * o.y);
    m.ty = -(r.x * o.y - r.y * o.x) / factor;
    return affine_apply(c, m);
}

std::vector<RPoint> Stick::squeezed(const Rational& factor) const {
    std::vector<RPoint> out;
    out.reserve(local.size());
    for (const RPoint& p : local) out.push_back({p.x, p.y / factor});
    return out;
}

Stick make_stick(const Config& c) {
    const std::size_t n = c.size();
    if (n % 2 != 0 || n < 2) throw Error(ErrorKind::OddPointCount, "stick needs an even point count");
    for (std::size_t i = 0;; ++i) {
        const RPoint up = up_candidate(i).vec();
        const RPoint axis = rot_cw(up);
        std::vector<RPoint> loc;
        loc.reserve(n);
        for (const RPoint& p : c.points()) loc.push_back({dot(p, axis), dot(p, up)});
        std::vector<Rational> xs;
        for (const RPoint& p : loc) xs.push_back(p.x);
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;

        const Rational mid = (xs[n / 2 - 1] + xs[n / 2]) / Rational(2);
        Rational mean = 0;
        for (const RPoint& p : loc) mean += p.y;
        mean /= Rational(static_cast<long>(n));
        const Rational w = std::max((xs.front() - mid).abs(), (xs.back() - mid).abs());

        Stick s;
        for (const RPoint& p : loc) s.local.push_back({(p.x - mid) / w, (p.y - mean) / w});
        s.gap = (xs[n / 2] - xs[n / 2 - 1]) / w;
        for (std::size_t a = 0; a < n; ++a) {
            s.max_eta = std::max(s.max_eta, s.local[a].y.abs());
            for (std::size_t b = a + 1; b < n; ++b) {
                const RPoint d = s.local[b] - s.local[a];
                s.max_slope = std::max(s.max_slope, (d.y / d.x).abs());
            }
        }
        return s;
    }
}

namespace {

Rational pow2_at_least(const Rational& x) {
    if (x.sign() <= 0) return 1;
    int e = x.floor_log2();
    Rational p = Rational::pow2(e);
    if (p < x) p = Rational::pow2(e + 1);
    return p;
}

Geograph shifted_union(const Geograph& a, const Geograph& b, const Config& c) {
    std::vector<Edge> e = a.edges();
    for (const auto& [i, j] : b.edges()) e.emplace_back(i + a.size(), j + a.size());
    return Geograph(c, std::move(e));
}

}  // namespace

CrossResult cross(const Config& c1, const Config& c2) {
    const Stick s1 = make_stick(c1);
    const Stick s2 = make_stick(c2);
    const Geograph g1 = halving_edges(c1, validation_algo(c1.size()));
    const Geograph g2 = halving_edges(c2, validation_algo(c2.size()));
    const Rational spread = Rational(1) + s1.max_slope + s2.max_slope + s1.max_eta + s2.max_eta;
    const Rational start = pow2_at_least(Rational(16) * spread / std::min(s1.gap, s2.gap));

    for (std::size_t angle = 0; angle < 3; ++angle) {
        const RPoint a2 = up_candidate(angle).vec();
        const RPoint n2 = rot_ccw(a2);
        Rational f = start;
        for (int attempt = 0; attempt < 6; ++attempt, f *= Rational(16)) {
            std::vector<RPoint> pts = s1.squeezed(f);
            for (const RPoint& p : s2.squeezed(f)) pts.push_back(p.x * a2 + p.y * n2);
            if (!is_general_position(std::span<const RPoint>(pts)).ok) continue;
            Config c(std::move(pts));
            const Geograph h = halving_edges(c, validation_algo(c.size()));
            if (h != shifted_union(g1, g2, c)) continue;
            CrossResult r{std::move(c), {}, f};
            r.provenance.assign(c1.size(), 0);
            r.provenance.resize(c1.size() + c2.size(), 1);
            return r;
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "cross: no squeeze factor passed validation");
}

namespace {

struct IP {
    long x, y;
};

long orient_int(const IP& a, const IP& b, const IP& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Triangle with one pendant at each corner: degrees {1,1,1,3,3,3}, 6 edges,
// the three degree-3 vertices mutually adjacent.
bool is_unicyclic6(const std::array<IP, 6>& p) {
    int deg[6] = {};
    bool adj[6][6] = {};
    int edges = 0;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            int left = 0;
            for (int k = 0; k < 6; ++k) {
                if (k != i && k != j && orient_int(p[i], p[j], p[k]) > 0) ++left;
            }
            if (left == 2) {
                ++deg[i];
                ++deg[j];
                ++edges;
                adj[i][j] = adj[j][i] = true;
            }
        }
    }
    if (edges != 6) return false;
    int hubs[3];
    int h = 0;
    for (int i = 0; i < 6; ++i) {
        if (deg[i] == 3) {
            if (h == 3) return false;
            hubs[h++] = i;
        } else if (deg[i] != 1) {
            return false;
        }
    }
    return h == 3 && adj[hubs[0]][hubs[1]] && adj[hubs[1]][hubs[2]] && adj[hubs[0]][hubs[2]];
}

bool search(const std::vector<IP>& grid, std::size_t from, std::size_t depth, std::array<IP, 6>& cur) {
    if (depth == 6) return is_unicyclic6(cur);
    for (std::size_t idx = from; idx < grid.size(); ++idx) {
        const IP& q = grid[idx];
        bool ok = true;
        for (std::size_t a = 0; a < depth && ok; ++a) {
            for (std::size_t b = a + 1; b < depth; ++b) {
                if (orient_int(cur[a], cur[b], q) == 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        cur[depth] = q;
        if (search(grid, idx + 1, depth + 1, cur)) return true;
    }
    return false;
}

}  // namespace

Config search_unicyclic6() {
    // Grid [0,12]^2 indexed x*13+y; 6-subsets in lexicographic index order,
    // pruning prefixes that already contain a collinear triple.
    std::vector<IP> grid;
    for (long x = 0; x <= 12; ++x) {
        for (long y = 0; y <= 12; ++y) grid.push_back({x, y});
    }
    std::array<IP, 6> cur{};
    if (!search(grid, 0, 0, cur)) throw Error(ErrorKind::SearchExhausted, "no unicyclic 6-point config on the grid");
    std::vector<RPoint> pts;
    for (const IP& p : cur) pts.push_back({p.x, p.y});
    return Config(std::move(pts));
}

Config find_unicyclic6() {
    static const Config cached({{0, 0}, {0, 2}, {1, 1}, {1, 2}, {4, 3}, {6, 4}});
    return cached;
}

}  // namespace kfission
