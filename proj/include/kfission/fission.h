#pragma once

#include "kfission/chains.h"
#include "kfission/halving.h"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kfission {

/// k points in a local frame; placed as vertex + scale * R(rotation) * p,
/// where R(d) = [[dx, -dy], [dy, dx]] for the primitive integer direction d.
struct ClusterTemplate {
    std::vector<RPoint> points;

    std::size_t k() const { return points.size(); }
};

struct FissionPlan {
    Geograph base;
    std::vector<ClusterTemplate> templates;  // one per base vertex, equal sizes
    Rational eps;
    std::vector<Direction> rotation;         // one per base vertex
    std::vector<Rational> scale;             // one per base vertex
};

struct Origin {
    std::size_t base = 0;  // base vertex
    std::size_t rank = 0;  // index within the cluster template

    friend bool operator==(const Origin&, const Origin&) = default;
};

/// New index of (v, r) is v + r * |base|.
struct FissionResult {
    Geograph base;
    std::size_t k = 1;
    Rational eps;
    Config config;
    std::vector<Origin> origin;
    Geograph geograph;
};

/// Placement of a template point.
RPoint place(const RPoint& vertex, const Rational& scale, const Direction& rotation, const RPoint& local);

/// Operative separation certificate: for every segment ab between base
/// points and every other base point p, every line through the eps-disks of
/// a and b keeps the eps-disk of p strictly on p's side.
bool separation_certified(const Config& c, const Rational& eps);

/// Largest power of two below a quarter of the minimum distance, halved
/// until separation_certified holds.
Rational safe_epsilon(const Geograph& g);

/// Throws PlanInvariantViolation when the plan is malformed, eps is unsafe,
/// or a placed cluster leaves its eps-disk.
void validate_plan(const FissionPlan& plan);

/// Places every cluster and computes the halving geograph. With `verify`,
/// every fission lemma is checked and the first failure is thrown as
/// InvariantViolation naming it.
FissionResult fission(const FissionPlan& plan, bool verify = true);

/// g itself as a 1-fission.
FissionResult identity_fission(const Geograph& g);

struct EdgeClasses {
    std::vector<Edge> traversing;
    std::vector<Edge> non_traversing;
};

/// Splits edges by the origin map. Throws InvariantViolation if a
/// non-traversing edge's direction lies outside every eps-corridor of the
/// base edges at its cluster.
EdgeClasses classify_edges(const FissionResult& r);

/// Edge count equals k * e(G) and no edge is non-traversing. Throws
/// InvariantViolation if the two tests disagree.
bool is_plain(const FissionResult& r);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct FissionReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    /// First failing check, or nullptr.
    const CheckResult* first_failure() const;
};

/// Runs every applicable lemma check without throwing. Covering and degree
/// checks apply to plain results; component laws to plain results over a
/// connected base.
FissionReport verify_fission(const FissionResult& r);

/// Rebuilds a result from files: eps is the smallest power of two covering
/// every cluster's radius.
FissionResult reconstruct_fission(const Geograph& base, const Geograph& h, const std::vector<Origin>& origin);

/// The i-th rotation candidate: primitive integer vectors ordered by
/// max(|a|,|b|), then lexicographically.
Direction rotation_candidate(std::size_t i);

/// Plain k-fission: arc templates rotated into a direction whose every
/// intra-cluster chord avoids all eps-corridors. Also checks covering and
/// degree preservation.
FissionResult plain_fission(const Geograph& g, std::size_t k, bool verify = true);
/// Same, with a fixed rotation per vertex; eps is halved until every
/// rotation is certified.
FissionResult plain_fission(const Geograph& g, std::size_t k, std::span<const Direction> rotations,
                            bool verify = true);

/// Identical nearly collinear clusters (a flat parabola) along one certified
/// direction. Also checks that every traversing edge joins rank m to rank
/// k-1-m.
FissionResult parallel_fission(const Geograph& g, std::size_t k, bool verify = true);

/// Each vertex becomes a squeezed copy of b aligned with its functional
/// outedge and split in half by the vertex. Checks that each cluster's
/// non-traversing edges are exactly b's halving edges and that
/// |E| = |b| e_G + e_G e_b.
FissionResult forest_fission(const Geograph& g, const Config& b, bool verify = true);

/// g(1) = unicyclic6, g(k) = forest_fission(unicyclic6, g(k-1)); 1 <= k <= 3.
FissionResult g_sequence(std::size_t k, bool verify = true);

/// Common frame for base and fission, decomposes both, and checks that each
/// base chain is overlapped by exactly k fission chains with the same
/// cluster sequence. Throws NoCommonFrame.
bool chain_split_check(const Geograph& base, const FissionResult& r);

/// Two plain 2-fissions of unicyclic6 whose induced graphs on the 3-cycle
/// clusters differ: {C3, C3} and {C6} (in that order).
std::pair<FissionResult, FissionResult> divergent_plain_fissions(const Geograph& unicyclic);

/// 2-fissions of the 2-path with eps = 1/8: the first has one cluster chord
/// aligned with the base edge and gains a non-traversing edge; the second
/// uses vertical chords and is plain.
std::pair<FissionResult, FissionResult> two_path_exhibits();

}  // namespace kfission
