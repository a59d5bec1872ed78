// The six-partition point, the convex-wedge fan with integer weight
// classification, the fast balanced-island algorithm and the orchestrator.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "balis/errors.hpp"
#include "balis/island.hpp"
#include "balis/strip.hpp"
#include "balis/wedge.hpp"

namespace balis {

struct SixPartition {
    RatPoint center;
    std::array<std::pair<BigInt, BigInt>, 3> line_dirs;  // integer direction vectors
    std::array<int, 6> region_counts{};
};

// Exact check: lines concurrent at the center by construction, no point on
// any line, and every open region holds >= n/6 - 1 points (6*count >= n-6).
bool verify_six_partition(const ColoredPointSet& ps, const SixPartition& sp,
                          std::string* why = nullptr);

// Region-count bound as an integer predicate.
inline bool region_count_ok(int count, int n) { return 6 * count >= n - 6; }

// Verified search for a six-partition point: perpendicular halving-line
// candidates first, then a centre-out sweep of halving-slab candidates, then
// (small n) arrangement cell samples. The returned certificate always passes
// verify_six_partition; exhausting the search throws internal_error.
SixPartition ceder_point(const ColoredPointSet& ps);

// Feasibility of three concurrent lines through p. Serial cubic reference for
// the pruned scanner used in production.
bool six_partition_feasible_at(const ColoredPointSet& ps, const RatPoint& p,
                               SixPartition* out = nullptr);
bool six_partition_feasible_at_brute(const ColoredPointSet& ps, const RatPoint& p,
                                     SixPartition* out = nullptr);

// All n circular k-windows around the apex with red counts and convex flags.
AngularState wedge_fan(const RatPoint& apex, const ColoredPointSet& ps, int k,
                       std::optional<int> target_red = std::nullopt);

int count_convex_windows(const AngularState& fan);

struct FastPrecondition {
    int k = 0;
    BigInt lhs;       // 3k - n + 4
    BigInt radicand;  // n + r*ceil(alpha b) - b*ceil(alpha r)
    bool satisfied = false;
    std::string describe() const;
};

FastPrecondition evaluate_fast_precondition(const ColoredPointSet& ps, const Rat& alpha);

// Raised when a paper-guaranteed step of the fast algorithm fails at runtime;
// the orchestrator downgrades to the exact searches and records it.
struct fast_assertion_error : internal_error {
    explicit fast_assertion_error(const std::string& what) : internal_error(what) {}
};

struct FastDiagnostics {
    int fallback_count = 0;
    std::vector<std::string> messages;
};

struct FastStageTimes {
    double ceder_ms = 0, fan_ms = 0, path_ms = 0;
};

enum class CertFamily { Empty, Wedge, Strip, Path, Oracle };

struct PathCert {
    RatPoint apex;               // six-partition centre the fan was built at
    int positive_first = -1, positive_last = -1;
    int negative_first = -1, negative_last = -1;
};

struct Certificate {
    CertFamily family = CertFamily::Empty;
    std::optional<Wedge> wedge;
    std::optional<Strip> strip;
    std::optional<PathCert> path;
};

// The O(n log n) pipeline. Requires the fast precondition; throws
// fast_assertion_error if a guaranteed step fails (callers may fall back).
// A precomputed six-partition centre skips the ceder stage.
Island fast_balanced_island(const ColoredPointSet& ps, const Rat& alpha,
                            Certificate* cert = nullptr, FastDiagnostics* diag = nullptr,
                            FastStageTimes* times = nullptr,
                            const SixPartition* center = nullptr);

enum class Algorithm { Auto, Wedge, Strip, Fast, Brute };

struct BalancedQuery {
    Rat alpha;
    int theorem_case = 1;  // 1 or 2
    Algorithm algorithm = Algorithm::Auto;
    bool allow_fast = true;    // auto mode only
    int oracle_cap = kOracleDefaultCap;
};

struct BalancedResult {
    bool found = false;  // false only for brute or a forced single family
    TargetCounts targets;
    Island island;
    Certificate certificate;
};

// Case 1 targets (ceil(alpha r), ceil(alpha b)); case 2 targets
// (ceil((r+1)/2), ceil((b+1)/2)). In auto mode a NotFound from both exact
// families is a theorem violation and throws internal_error.
BalancedResult balanced_island(const ColoredPointSet& ps, const BalancedQuery& query,
                               FastDiagnostics* diag = nullptr);

TargetCounts theorem_targets(const ColoredPointSet& ps, const Rat& alpha, int theorem_case);

}  // namespace balis
