#include "kfission/geometry.h"

#include <algorithm>
#include <string>

namespace kfission {

Direction::Direction(const Rational& dx, const Rational& dy) {
    if (dx.is_zero() && dy.is_zero()) {
        throw Error(ErrorKind::DegenerateSegment, "zero direction");
    }
    // Clear denominators, then divide by the gcd of the integer components.
    const mpz_class l = lcm(dx.den(), dy.den());
    mpz_class ix = dx.num() * (l / dx.den());
    mpz_class iy = dy.num() * (l / dy.den());
    const mpz_class g = gcd(ix, iy);
    ix /= g;
    iy /= g;
    dx_ = Rational(ix, mpz_class(1));
    dy_ = Rational(iy, mpz_class(1));
}

Direction Direction::modulo_sign() const {
    if (dx_.sign() < 0 || (dx_.is_zero() && dy_.sign() < 0)) return reversed();
    return *this;
}

Config::Config(std::vector<RPoint> points) : points_(std::move(points)) {
    const auto report = is_general_position(std::span<const RPoint>(points_));
    if (!report.ok) {
        const auto& w = *report.witness;
        throw NotGeneralPositionError(
            w, "points " + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                   std::to_string(w[2]) + (w[1] == w[2] ? " coincide" : " are collinear"));
    }
}

Config Config::unchecked(std::vector<RPoint> points) {
    Config c;
    c.points_ = std::move(points);
    return c;
}

int orient(const RPoint& a, const RPoint& b, const RPoint& c) {
    return cross(b - a, c - a).sign();
}

GeneralPositionReport is_general_position(std::span<const RPoint> points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) return {false, std::array<std::size_t, 3>{i, j, j}};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const RPoint d = points[j] - points[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                if (cross(d, points[k] - points[i]).is_zero()) {
                    return {false, std::array<std::size_t, 3>{i, j, k}};
                }
            }
        }
    }
    return {};
}

Config affine_apply(const Config& c, const AffineMap& m) {
    if (m.det().is_zero()) throw Error(ErrorKind::SingularMatrix, "affine map is not invertible");
    std::vector<RPoint> out;
    out.reserve(c.size());
    for (const auto& p : c.points()) out.push_back(m.apply(p));
    // Invertible affine maps preserve distinctness and collinearity.
    return Config::unchecked(std::move(out));
}

bool corridor_contains(const RPoint& seg_from, const RPoint& seg_to, const Rational& eps,
                       const Direction& d) {
    const RPoint s = seg_to - seg_from;
    if (s.x.is_zero() && s.y.is_zero()) {
        throw Error(ErrorKind::DegenerateSegment, "segment endpoints coincide");
    }
    if (eps.sign() <= 0) throw Error(ErrorKind::EpsilonTooLarge, "eps must be positive");
    const Rational four_eps2 = Rational(4) * eps * eps;
    if (norm2(s) <= four_eps2) {
        throw Error(ErrorKind::EpsilonTooLarge, "segment shorter than 2 eps");
    }
    const RPoint v = d.vec();
    const Rational c = cross(v, s);
    // |s| > 2 eps makes dot(v, s) nonzero whenever the chord bound holds, so
    // the acute-deviation side condition is implied.
    return c * c <= four_eps2 * norm2(v);
}

Rational min_pairwise_dist2(std::span<const RPoint> points) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rational d = norm2(points[j] - points[i]);
            if (!best || d < *best) best = std::move(d);
        }
    }
    if (!best) throw Error(ErrorKind::InvariantViolation, "need at least two points");
    return *best;
}

}  // namespace kfission
