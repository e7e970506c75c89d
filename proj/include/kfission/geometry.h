#pragma once

#include "kfission/error.h"
#include "kfission/rational.h"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kfission {

struct RPoint {
    Rational x;
    Rational y;

    friend RPoint operator+(const RPoint& a, const RPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend RPoint operator-(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend RPoint operator*(const Rational& s, const RPoint& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const RPoint& a, const RPoint& b) = default;
};

inline Rational cross(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const RPoint& a, const RPoint& b) { return a.x * b.x + a.y * b.y; }
inline Rational norm2(const RPoint& a) { return dot(a, a); }
/// L1 norm; an upper bound on the Euclidean length that stays rational.
inline Rational norm1(const RPoint& a) { return a.x.abs() + a.y.abs(); }
/// Quarter turn clockwise: (x, y) -> (y, -x).
inline RPoint rot_cw(const RPoint& a) { return {a.y, -a.x}; }
/// Quarter turn counterclockwise: (x, y) -> (-y, x).
inline RPoint rot_ccw(const RPoint& a) { return {-a.y, a.x}; }

/// A directed direction. Two directions compare equal when they differ by a
/// positive factor; `d` and `-d` are distinct unless compared via
/// `same_line`.
class Direction {
public:
    Direction(const Rational& dx, const Rational& dy);
    explicit Direction(const RPoint& v) : Direction(v.x, v.y) {}

    /// Primitive integer components (gcd 1), as rationals.
    const Rational& dx() const { return dx_; }
    const Rational& dy() const { return dy_; }
    RPoint vec() const { return {dx_, dy_}; }

    Direction reversed() const { return Direction(-dx_, -dy_); }
    /// Representative of the undirected line: first nonzero coordinate positive.
    Direction modulo_sign() const;
    bool same_line(const Direction& other) const { return modulo_sign() == other.modulo_sign(); }

    friend bool operator==(const Direction& a, const Direction& b) = default;

private:
    Rational dx_;
    Rational dy_;
};

/// Ordered point list in general position (all distinct, no three collinear).
class Config {
public:
    Config() = default;
    /// Validates general position; throws NotGeneralPositionError.
    explicit Config(std::vector<RPoint> points);

    /// Skips validation. For intermediate constructions that validate later.
    static Config unchecked(std::vector<RPoint> points);

    std::size_t size() const { return points_.size(); }
    const RPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<RPoint>& points() const { return points_; }

    friend bool operator==(const Config& a, const Config& b) = default;

private:
    std::vector<RPoint> points_;
};

/// Sign of (b - a) x (c - a): +1 when c is strictly left of a->b.
int orient(const RPoint& a, const RPoint& b, const RPoint& c);

struct GeneralPositionReport {
    bool ok = true;
    /// Indices of the first violating triple (duplicates: {i, j, j}).
    std::optional<std::array<std::size_t, 3>> witness;
};

GeneralPositionReport is_general_position(std::span<const RPoint> points);
inline GeneralPositionReport is_general_position(const Config& c) {
    return is_general_position(std::span<const RPoint>(c.points()));
}

/// p -> M p + t.
struct AffineMap {
    Rational a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    Rational tx = 0, ty = 0;

    Rational det() const { return a11 * a22 - a12 * a21; }
    RPoint apply(const RPoint& p) const {
        return {a11 * p.x + a12 * p.y + tx, a21 * p.x + a22 * p.y + ty};
    }
};

/// Throws SingularMatrix when det(M) = 0.
Config affine_apply(const Config& c, const AffineMap& m);

/// Conservative epsilon-corridor test: true when direction d, modulo sign,
/// could be realized by a line through the eps-disks around both segment
/// endpoints. Uses the chord bound cross(d, s)^2 <= 4 eps^2 |d|^2, a superset
/// of the true corridor.
bool corridor_contains(const RPoint& seg_from, const RPoint& seg_to, const Rational& eps,
                       const Direction& d);

/// Minimum squared distance over all pairs; requires size >= 2.
Rational min_pairwise_dist2(std::span<const RPoint> points);

}  // namespace kfission
