#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyc/channel.hpp"
#include "dyc/rational.hpp"

namespace dyc {

/// The six unicast streams, in rate-tuple order (R12, R13, R21, R23, R31, R32).
enum class Stream : int { s12 = 0, s13, s21, s23, s31, s32 };

inline constexpr std::array<Stream, 6> kStreams = {Stream::s12, Stream::s13, Stream::s21,
                                                   Stream::s23, Stream::s31, Stream::s32};
inline constexpr int kNumStreams = 6;

constexpr int index_of(Stream s) { return static_cast<int>(s); }
Stream stream_of(User from, User to);
User sender(Stream s);
User receiver(Stream s);
/// The stream in the opposite direction (s12 <-> s21, ...).
Stream reverse(Stream s);
/// "12", "13", ...
std::string stream_name(Stream s);

/// Six non-negative exact rates, in bits per channel use.
class RateTuple {
public:
    RateTuple() = default;
    /// Throws Error(invalid_argument) on a negative component.
    explicit RateTuple(const std::array<Rational, 6>& rates);
    static RateTuple from_integers(const std::array<std::int64_t, 6>& rates);

    [[nodiscard]] const Rational& operator[](Stream s) const { return rates_[static_cast<std::size_t>(index_of(s))]; }
    [[nodiscard]] const std::array<Rational, 6>& values() const { return rates_; }
    [[nodiscard]] bool is_integral() const;
    /// Requires is_integral().
    [[nodiscard]] std::array<std::int64_t, 6> integers() const;
    [[nodiscard]] RateTuple scaled(std::int64_t factor) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RateTuple&, const RateTuple&) = default;
    friend auto operator<=>(const RateTuple&, const RateTuple&) = default;

private:
    std::array<Rational, 6> rates_{};
};

/// Names the origin of an inequality.
struct Label {
    enum class Kind { trb1, trb2, trb3, trb4, trb5, trb6, cs3a, cs3b, cs1a, cs1b, cs2a, cs2b, single, nonneg };
    Kind kind;
    Stream stream = Stream::s12;  // meaningful for single and nonneg

    /// "TRB1", "CS3a", "SINGLE(1,2)", "NONNEG(3,1)", ...
    [[nodiscard]] std::string str() const;
    static std::optional<Label> parse(const std::string& text);

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

/// coefficients . R <= bound
struct Inequality {
    std::array<int, 6> coefficients{};
    std::int64_t bound = 0;
    Label label;

    [[nodiscard]] Rational lhs(const RateTuple& r) const;
    [[nodiscard]] Rational lhs(const std::array<Rational, 6>& r) const;
    [[nodiscard]] bool holds(const RateTuple& r) const { return lhs(r) <= Rational(bound); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct Region {
    ChannelConfig config;
    std::vector<Inequality> inequalities;

    /// The substantive inequalities, i.e. everything but NONNEG.
    [[nodiscard]] std::vector<Inequality> substantive() const;
};

/// TRB1..TRB6 plus CS3a/CS3b, followed by the six non-negativity constraints.
Region outer_bound(const ChannelConfig& config);

/// The pairwise cut-set bounds (CS1a..CS3b) and the single-rate bounds
/// R_jk <= min(n_j, n_k), followed by the six non-negativity constraints.
Region cutset_bounds(const ChannelConfig& config);

/// Union of two regions' inequalities over the same config (duplicates of NONNEG dropped).
Region intersect(const Region& a, const Region& b);

bool is_member(const RateTuple& r, const Region& region);
bool is_member(const std::array<Rational, 6>& r, const Region& region);
std::vector<Label> violated(const RateTuple& r, const Region& region);

struct Vertex {
    RateTuple point;
    std::vector<Label> tight;
};

/// All vertices by exhaustive basis enumeration: every 6-subset of the
/// constraints is solved exactly, infeasible solutions discarded, duplicates
/// merged. Sorted lexicographically by point. Throws Error(internal_infeasible)
/// if a returned point fails its tight-rank check.
std::vector<Vertex> vertices(const Region& region);

/// Rank of the coefficient matrix of the given inequalities (exact).
int coefficient_rank(const std::vector<Inequality>& rows);

enum class Verdict { redundant, essential };

struct RedundancyEntry {
    Inequality inequality;
    Rational max_over_outer_bound;  // max of the lhs over outer_bound(config) minus this very inequality
    Verdict verdict;
};

struct RedundancyReport {
    ChannelConfig config;
    std::vector<RedundancyEntry> entries;  // one per non-NONNEG inequality of cutset_bounds(config)
};

/// Decides, by exact LP, whether each cut-set and single-rate inequality can
/// be violated by a point of the outer bound.
RedundancyReport redundancy_report(const ChannelConfig& config);

/// Visits every integer tuple of the region, in lexicographic order.
/// Requires a bounded region; boxes each coordinate by its LP maximum.
void for_each_integer_point(const Region& region, const std::function<void(const std::array<std::int64_t, 6>&)>& visit);

std::vector<RateTuple> integer_points(const Region& region);

}  // namespace dyc
