#pragma once

#include "kfission/halving.h"

#include <span>
#include <vector>

namespace kfission {

/// ((1-t^2)/(1+t^2), 2t/(1+t^2)): an exact rational point on the unit circle.
RPoint circle_point(const Rational& t);

/// n points on the unit circle at the given distinct parameters.
Config convex_polygon(std::size_t n, std::span<const Rational> params);
/// Deterministic default parameters j - (n-1)/2.
std::vector<Rational> default_polygon_params(std::size_t n);
Config convex_polygon(std::size_t n);

/// n-1 nearly regular circle points followed by the center (0,0). The
/// result is validated to have the star K_{1,n-1} as halving graph.
Config star_config(std::size_t n);

/// {(0,0), (1,0)}.
Config two_path();

/// Rotates the diameter direction to horizontal and divides the vertical
/// coordinate by `factor`. Halving edges are unchanged.
Config segmentarize(const Config& c, const Rational& factor);

/// A configuration in normalized stick coordinates: the axis is the first
/// up-schedule frame axis with distinct projections, the middle gap is
/// centered at 0 and |xi| <= 1. The local map is an orientation-preserving
/// affine map of the input, so halving edges are unchanged.
struct Stick {
    std::vector<RPoint> local;  // (xi, eta) per input point
    Rational gap;               // distance between the two middle xi values
    Rational max_eta;           // max |eta|
    Rational max_slope;         // max |d eta / d xi| over all pairs

    /// Local points with eta divided by `factor`.
    std::vector<RPoint> squeezed(const Rational& factor) const;
};

Stick make_stick(const Config& c);

struct CrossResult {
    Config config;                  // points of c1 then points of c2
    std::vector<int> provenance;    // 0 for c1 points, 1 for c2 points
    Rational squeeze;               // factor that passed validation
};

/// Two squeezed sticks crossing at their middle gaps. Validated: the halving
/// graph is the disjoint union of the inputs' graphs.
CrossResult cross(const Config& c1, const Config& c2);

/// Lexicographically first 6-point subset of the grid [0,12]^2 (points
/// indexed x*13+y) in general position whose halving graph is a triangle
/// with one pendant edge at each corner.
Config search_unicyclic6();

/// Result of search_unicyclic6, frozen.
Config find_unicyclic6();

}  // namespace kfission
