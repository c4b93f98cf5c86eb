#pragma once

// Relay level assignment for integer rate tuples inside the outer bound.
//
// Three stages run in order, each consuming relay levels and leaving a
// residual rate tuple over a reduced channel:
//   1. bi-directional: pairs j<->k XOR one bit each onto a shared level
//      (2 bits per level);
//   2. cyclic: a directed 3-cycle served by two XOR groups with one stream
//      repeated on both (3 bits per 2 levels);
//   3. uni-directional: store-and-forward, one bit per level, with the relay
//      free to move a bit to a different downlink level.
//
// The reduced channel is tracked as an ascending list of still-free physical
// levels; reduced level i is the i-th free level. Reduced gains are the free
// level counts within each user's access class, and are cross-checked against
// the closed-form updates of each stage.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dyc/channel.hpp"
#include "dyc/region.hpp"

namespace dyc {

using IntRates = std::array<std::int64_t, 6>;

enum class StrategyKind { bidirectional, cyclic, unidirectional };

/// forward: 1 -> 2 -> 3 -> 1, backward: 1 -> 3 -> 2 -> 1.
enum class CycleDirection { forward, backward };

/// A set of relay levels on which the listed streams are superimposed.
/// Bit i of every term sits on uplink_levels[i]; the relay re-emits it on
/// downlink_levels[i].
struct LevelGroup {
    std::vector<Stream> terms;
    std::vector<int> uplink_levels;
    std::vector<int> downlink_levels;
};

struct StreamAssignment {
    StrategyKind kind = StrategyKind::unidirectional;
    std::vector<Stream> streams;
    std::optional<CycleDirection> cycle;
    int width = 0;
    std::vector<LevelGroup> groups;

    [[nodiscard]] int levels_used() const;
    [[nodiscard]] int bits_delivered() const;
};

struct StageState {
    ChannelConfig config;
    IntRates residual{};
    std::array<int, 3> reduced{};  // (n1', n2', n3') as free-level counts
    std::vector<int> free_levels;  // ascending physical levels, shared by uplink and downlink
    int a = 0, b = 0, c = 0, d = 0, e = 0;

    /// Physical level of reduced level i (1-based).
    [[nodiscard]] int physical(int reduced_level) const;
};

/// Stage quantities and the reduced channels they produced.
struct StageTrace {
    int a = 0, b = 0, c = 0, d = 0, e = 0;
    std::array<int, 3> after_bidirectional{};
    std::array<int, 3> after_cyclic{};
    IntRates residual_after_bidirectional{};
    IntRates residual_after_cyclic{};
};

struct LevelPlan {
    ChannelConfig config;
    IntRates rates{};
    std::vector<StreamAssignment> assignments;
    std::map<int, int> relay_map;  // uplink level -> downlink level
    StageTrace trace;
};

/// Counts of free levels accessible to users 1, 2, 3.
std::array<int, 3> access_counts(const std::vector<int>& free_levels, const ChannelConfig& config);

/// Stage 1. Requires an integral member of outer_bound(config).
std::pair<StageState, std::vector<StreamAssignment>> bidir_stage(const RateTuple& rates, const ChannelConfig& config);

/// Stage 2. Requires a residual with no bi-directional pair left.
std::pair<StageState, std::vector<StreamAssignment>> cyclic_stage(const StageState& state);

/// Stage 3. Requires a residual with neither a bi-directional pair nor a 3-cycle.
std::vector<StreamAssignment> uni_stage(const StageState& state);

/// Full plan; throws Error(not_in_region) for tuples outside the outer bound
/// and Error(precondition_violated) for non-integral tuples.
LevelPlan build_plan(const RateTuple& rates, const ChannelConfig& config);

/// Rebuilds relay_map from the assignment groups.
std::map<int, int> relay_map_of(const std::vector<StreamAssignment>& assignments);

/// Stream s carries bits [offset, offset + width) of its message in
/// assignment i, where offset = bit_offsets(plan)[i][index_of(s)]; earlier
/// assignments take the lower bit indices.
std::vector<std::array<int, 6>> bit_offsets(const std::vector<StreamAssignment>& assignments);

/// Bits per channel use each stream receives under the plan's assignments.
IntRates delivered_rates(const LevelPlan& plan);

/// Checks every structural invariant of a plan and that each user can
/// recover all of its streams. Throws Error(invalid_plan) on the first
/// violation.
void validate_plan(const LevelPlan& plan);

/// One unit of a stream: bit `bit` of stream `stream`.
struct BitRef {
    Stream stream;
    int bit;
    friend auto operator<=>(const BitRef&, const BitRef&) = default;
};

/// A decoding step: read downlink level `level`, XOR out the already known
/// bits, and the result is `target`.
struct DecodeStep {
    int level;
    BitRef target;
    std::vector<BitRef> known;
};

/// Dependency-ordered decoding schedule for user j: at most two sweeps over
/// the levels j can read. Throws Error(unresolvable_chain) if some bit
/// destined to j stays unknown.
std::vector<DecodeStep> decode_schedule(const LevelPlan& plan, User j);

struct SymbolExtension {
    std::int64_t factor;  // Q
    RateTuple rates;      // Q * R
    ChannelConfig config;  // (Q n1, Q n2, Q n3)
};

/// Smallest Q with Q * R integral (lcm of the denominators). Throws
/// Error(not_in_region) if R is outside the outer bound.
SymbolExtension symbol_extension(const RateTuple& rates, const ChannelConfig& config);

std::string_view to_string(StrategyKind kind);
std::string_view to_string(CycleDirection dir);

}  // namespace dyc
