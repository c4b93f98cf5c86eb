#pragma once

// Brute-force cross-checks. Apart from the shared value types, nothing here
// calls into the region or scheme code it is checking: the outer bound is
// re-stated from its closed form, ranks and hull membership are computed
// locally, and integer points are found by a plain box scan. The planner
// and simulator are exercised only as black boxes by achievability_scan.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyc/lp.hpp"
#include "dyc/region.hpp"
#include "dyc/simulator.hpp"

namespace dyc::oracle {

struct LpOutcome {
    lp::Status status;
    Rational value;  // valid when optimal
};

/// Exact optimum of objective . R over the inequalities (variables unrestricted
/// in sign; non-negativity comes only from NONNEG rows if present).
LpOutcome lp_feasible(const std::vector<Inequality>& inequalities, const std::array<Rational, 6>& objective);

/// The outer bound for gains (n1, n2, n3), stated directly from its closed form.
bool reference_member(const std::array<Rational, 6>& r, const ChannelConfig& config);
bool reference_member(const IntRates& r, const ChannelConfig& config);

/// All integer tuples satisfying reference_member, by box scan over
/// 0 <= R_jk <= min(n_j, n_k).
std::vector<IntRates> reference_integer_points(const ChannelConfig& config);

/// Is the point a convex combination of the given points? (exact LP)
bool in_convex_hull(const std::array<Rational, 6>& point, const std::vector<std::array<Rational, 6>>& hull);

struct PointCheck {
    RateTuple point;
    bool feasible = false;
    int tight_rank = 0;
    [[nodiscard]] bool is_vertex() const { return feasible && tight_rank == 6; }
};

struct VertexReport {
    std::vector<PointCheck> points;
    int hull_samples = 0;
    int hull_members = 0;        // samples that are members by direct evaluation
    int hull_disagreements = 0;  // direct membership != convex-hull membership

    [[nodiscard]] bool passed() const;
};

/// Checks feasibility and tight-set rank of each point, then draws
/// `hull_samples` seeded rational points and compares direct membership in
/// `region` with membership in the convex hull of the points.
VertexReport vertex_validate(const Region& region, const std::vector<RateTuple>& points, int hull_samples = 0,
                             std::uint64_t seed = 0);

/// Seeded rational sample around the region: half uniform in a box slightly
/// larger than the single-rate bounds, half scaled convex combinations of `anchors`.
std::vector<std::array<Rational, 6>> sample_points(const ChannelConfig& config,
                                                   const std::vector<std::array<Rational, 6>>& anchors, int count,
                                                   std::uint64_t seed);

struct ScanLimits {
    int max_points = -1;       // -1: every integer point; otherwise a seeded sample of this many
    int outside_probes = 64;   // out-of-bound probes that must be rejected
    std::uint64_t seed = 1;
    VerifyMode verify{};
};

struct ScanReport {
    ChannelConfig config;
    std::int64_t integer_points = 0;
    std::int64_t planned = 0;
    std::int64_t verified = 0;
    std::int64_t trials = 0;
    std::int64_t probes = 0;
    std::int64_t probes_rejected = 0;
    std::int64_t accounting_checked = 0;
    std::int64_t accounting_failures = 0;
    std::vector<std::string> violations;  // first few only
    std::int64_t violation_count = 0;

    [[nodiscard]] bool passed() const { return violation_count == 0; }
};

/// Rates per level of one assignment: bi-directional 2/1, cyclic 3/2, uni-directional 1/1.
bool accounting_holds(const StreamAssignment& sa);

/// For every (or a sample of) integer point of the outer bound: build_plan
/// must succeed, its accounting must hold, verify_plan must pass. Then
/// `outside_probes` points one unit beyond a tight constraint must be
/// rejected with NOT_IN_REGION.
ScanReport achievability_scan(const ChannelConfig& config, const ScanLimits& limits = {});

struct ProbeReport {
    std::int64_t probes = 0;
    std::int64_t rejected = 0;
    std::vector<std::string> violations;
    [[nodiscard]] bool passed() const { return rejected == probes && violations.empty(); }
};

/// Integer tuples exactly one unit beyond some outer-bound constraint (built
/// from seeded member points); each must be refused by build_plan with NOT_IN_REGION.
ProbeReport soundness_probes(const ChannelConfig& config, int count, std::uint64_t seed);

}  // namespace dyc::oracle
