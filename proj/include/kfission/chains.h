#pragma once

#include "kfission/halving.h"

#include <optional>
#include <vector>

namespace kfission {

/// The chosen "up" plus the induced left/right halves. Left/right is measured
/// along rot_cw(up), so up = (0,1) gives the usual x axis.
struct SweepFrame {
    Direction up{0, 1};
    std::vector<std::size_t> left_half;   // ascending along the axis
    std::vector<std::size_t> right_half;  // ascending along the axis

    RPoint axis() const { return rot_cw(up.vec()); }
};

/// Frame for `up`, or nullopt when two points tie along the axis (which
/// also covers edges parallel to `up`).
std::optional<SweepFrame> try_frame(const Config& c, const Direction& up);

/// The fixed schedule of candidate up directions: (0,1), then (1,N) for
/// N = 1, 2, 3, ...
Direction up_candidate(std::size_t index);

/// First schedule entry valid for g.
SweepFrame choose_generic_up(const Geograph& g);

/// A chain is its ordered edge list; every edge is (from, to) left to right.
using Chain = std::vector<Edge>;

struct ChainDecomposition {
    SweepFrame frame;
    std::vector<Chain> chains;

    /// Vertex sequence v1, v2, ..., vj of chain i.
    std::vector<std::size_t> vertices(std::size_t i) const;
};

enum class StartOrder { Increasing, Decreasing };

/// Clockwise rotating-line construction from every left-half vertex. Throws
/// InvariantViolation if any chain property fails.
ChainDecomposition decompose_chains(const Geograph& g, const SweepFrame& frame,
                                    StartOrder order = StartOrder::Increasing);

/// Runs the mirrored construction (right half, counterclockwise) and
/// compares it with the forward one.
bool verify_chain_reversibility(const Geograph& g, const SweepFrame& frame);

}  // namespace kfission
