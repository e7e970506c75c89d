#pragma once

#include "kfission/geometry.h"

#include <cstddef>
#include <utility>
#include <vector>

namespace kfission {

using Edge = std::pair<std::size_t, std::size_t>;

/// A configuration together with a set of edges between its points. Edges
/// are stored as sorted, unique pairs (i, j) with i < j.
class Geograph {
public:
    Geograph() = default;
    /// Normalizes edge order; throws InvariantViolation on out-of-range
    /// indices, self-loops or duplicates.
    Geograph(Config config, std::vector<Edge> edges);

    const Config& config() const { return config_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return config_.size(); }
    bool has_edge(std::size_t i, std::size_t j) const;
    std::vector<std::vector<std::size_t>> adjacency() const;

    friend bool operator==(const Geograph& a, const Geograph& b) = default;

private:
    Config config_;
    std::vector<Edge> edges_;
};

enum class HalvingAlgo { Oracle, Sweep, Checked };

/// Counts strict-left points for every pair. O(n^3).
Geograph halving_edges_oracle(const Config& c);

/// Angular sweep around every point. O(n^2 log n). Pivots are processed in
/// parallel when `threads` > 1; output order does not depend on it.
Geograph halving_edges_sweep(const Config& c, unsigned threads = 0);

/// Dispatches; `Checked` runs both and throws InvariantViolation on mismatch.
Geograph halving_edges(const Config& c, HalvingAlgo algo = HalvingAlgo::Checked);

/// Algorithm used by internal validators: Checked up to 100 points, Sweep
/// beyond (the cubic oracle dominates there).
inline HalvingAlgo validation_algo(std::size_t n) {
    return n <= 100 ? HalvingAlgo::Checked : HalvingAlgo::Sweep;
}

/// Throws InvariantViolation unless every edge is halving-sized and the
/// degree/edge-count consequences hold.
void check_halving_invariants(const Geograph& g);

std::vector<std::size_t> degrees(const Geograph& g);
/// Vertex degrees sorted ascending.
std::vector<std::size_t> degree_sequence(const Geograph& g);

}  // namespace kfission
