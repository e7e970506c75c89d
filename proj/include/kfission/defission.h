#pragma once

#include "kfission/fission.h"

#include <optional>
#include <string>
#include <vector>

namespace kfission {

enum class Verdict { DividesWitnessed, NecessaryConditionsFail, Unknown };

const char* to_string(Verdict v);

/// Outcome of a divisibility question. A DividesWitnessed verdict always
/// carries a fission witness and the map from h's vertices to the witness's
/// vertices; NecessaryConditionsFail always names the violated condition.
struct DivisibilityReport {
    std::string divisor;
    Verdict verdict = Verdict::Unknown;
    std::optional<FissionResult> witness;
    std::vector<std::size_t> index_map;
    std::string detail;
};

/// Realizes h as an (|h|/2)-fission of the 2-path, so the 2-path divides h.
/// Tries pulling the halves of a squeezed copy apart first; when that changes
/// the graph, falls back to a two-scale placement (one half as a tiny flat
/// cluster, the other as a cluster of slopes). Throws ConstructionFailed.
DivisibilityReport two_path_divides(const Geograph& h);

/// Necessary conditions for h to be a k-fission of some connected geograph
/// on g_size points. Throws ArithmeticMismatch unless g_size * k = |h|.
DivisibilityReport divisibility_necessary(const Geograph& h, std::size_t g_size, std::size_t k);

enum class Primitivity { PrimitiveCertified, NotPrimitiveWitnessed, Unknown };

const char* to_string(Primitivity p);

struct PrimitivityReport {
    Primitivity verdict = Primitivity::Unknown;
    /// One line per factorization considered.
    std::vector<std::string> reasons;
};

/// Certifies primitivity by refuting every factorization |h| = g_size * k
/// with 2 < g_size < |h|, for connected and disconnected divisors. A witness
/// (a fission with k >= 2 over a base of more than 2 points whose graph is
/// h) yields NotPrimitiveWitnessed. Throws TooLarge above 12 points.
PrimitivityReport primitivity_certificate(const Geograph& h, const FissionResult* witness = nullptr);

}  // namespace kfission
