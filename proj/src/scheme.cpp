#include "dyc/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace dyc {

namespace {

std::int64_t& at(IntRates& r, Stream s) { return r[static_cast<std::size_t>(index_of(s))]; }
std::int64_t at(const IntRates& r, Stream s) { return r[static_cast<std::size_t>(index_of(s))]; }

std::string counts_str(const std::array<int, 3>& n) {
    return "(" + std::to_string(n[0]) + ", " + std::to_string(n[1]) + ", " + std::to_string(n[2]) + ")";
}

std::vector<int> range_levels(int first, int last) {
    std::vector<int> out;
    for (int l = first; l <= last; ++l) out.push_back(l);
    return out;
}

std::vector<int> remove_levels(const std::vector<int>& from, const std::vector<int>& taken) {
    std::vector<int> out;
    std::set<int> t(taken.begin(), taken.end());
    for (int l : from) {
        if (!t.contains(l)) out.push_back(l);
    }
    return out;
}

StreamAssignment make_bidirectional(Stream forward, const std::vector<int>& levels) {
    StreamAssignment sa;
    sa.kind = StrategyKind::bidirectional;
    sa.streams = {forward, reverse(forward)};
    sa.width = static_cast<int>(levels.size());
    sa.groups.push_back({{forward, reverse(forward)}, levels, levels});
    return sa;
}

void require_counts(const std::array<int, 3>& counted, const std::array<int, 3>& expected, const char* stage) {
    if (counted != expected) {
        throw Error(ErrorCode::internal_infeasible, std::string(stage) + ": free-level counts " + counts_str(counted) +
                                                        " disagree with reduced gains " + counts_str(expected));
    }
}

}  // namespace

int StreamAssignment::levels_used() const {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.uplink_levels.size());
    return n;
}

int StreamAssignment::bits_delivered() const { return width * static_cast<int>(streams.size()); }

int StageState::physical(int reduced_level) const {
    if (reduced_level < 1 || reduced_level > static_cast<int>(free_levels.size())) {
        throw Error(ErrorCode::internal_infeasible, "reduced level " + std::to_string(reduced_level) + " out of range");
    }
    return free_levels[static_cast<std::size_t>(reduced_level - 1)];
}

std::array<int, 3> access_counts(const std::vector<int>& free_levels, const ChannelConfig& config) {
    std::array<int, 3> n{};
    for (User u : kUsers) {
        n[static_cast<std::size_t>(index_of(u))] = static_cast<int>(
            std::count_if(free_levels.begin(), free_levels.end(), [&](int l) { return l <= config.gain(u); }));
    }
    return n;
}

// ---------------------------------------------------------------------------
// Stage 1: bi-directional pairs

std::pair<StageState, std::vector<StreamAssignment>> bidir_stage(const RateTuple& rates, const ChannelConfig& config) {
    if (!is_member(rates, outer_bound(config))) {
        throw Error(ErrorCode::precondition_violated, "bi-directional stage needs a member of the outer bound");
    }
    const IntRates r = rates.integers();
    using enum Stream;
    const int a = static_cast<int>(std::min(at(r, s12), at(r, s21)));
    const int b = static_cast<int>(std::min(at(r, s13), at(r, s31)));
    const int c = static_cast<int>(std::min(at(r, s23), at(r, s32)));
    const int n1 = config.n1();
    const int n2 = config.n2();
    const int n3 = config.n3();
    if (b + c > n3 || a + b + c > n2) {
        throw Error(ErrorCode::internal_infeasible, "bi-directional stage does not fit");
    }

    std::vector<StreamAssignment> out;
    std::vector<int> used;
    auto place = [&](Stream forward, std::vector<int> levels) {
        if (levels.empty()) return;
        used.insert(used.end(), levels.begin(), levels.end());
        out.push_back(make_bidirectional(forward, levels));
    };
    place(s12, range_levels(n2 - a + 1, n2));
    place(s13, range_levels(1, b));
    place(s23, range_levels(b + 1, b + c));

    StageState st{config, r, {}, remove_levels(range_levels(1, config.q()), used), a, b, c, 0, 0};
    at(st.residual, s12) -= a;
    at(st.residual, s21) -= a;
    at(st.residual, s13) -= b;
    at(st.residual, s31) -= b;
    at(st.residual, s23) -= c;
    at(st.residual, s32) -= c;
    st.reduced = access_counts(st.free_levels, config);

    const int n2p = n2 - a - b - c;
    require_counts(st.reduced, {n1 - a - b - c, n2p, std::min(n3 - b - c, n2p)}, "bi-directional stage");
    return {std::move(st), std::move(out)};
}

// ---------------------------------------------------------------------------
// Stage 2: cyclic

std::pair<StageState, std::vector<StreamAssignment>> cyclic_stage(const StageState& state) {
    using enum Stream;
    const IntRates& r = state.residual;
    for (Stream s : {s12, s13, s23}) {
        if (at(r, s) > 0 && at(r, reverse(s)) > 0) {
            throw Error(ErrorCode::precondition_violated, "cyclic stage input still has a bi-directional pair");
        }
    }
    const int d = static_cast<int>(std::min({at(r, s12), at(r, s23), at(r, s31)}));
    const int e = static_cast<int>(std::min({at(r, s13), at(r, s32), at(r, s21)}));

    StageState next = state;
    next.d = d;
    next.e = e;
    std::vector<StreamAssignment> out;
    const int width = d + e;  // at most one of them is non-zero
    if (width == 0) return {std::move(next), std::move(out)};

    const int n2p = state.reduced[1];
    const int n3p = state.reduced[2];
    if (2 * width > n2p || width > n3p) {
        throw Error(ErrorCode::internal_infeasible, "cyclic stage needs 2*" + std::to_string(width) +
                                                        " <= n2' and " + std::to_string(width) + " <= n3', have " +
                                                        counts_str(state.reduced));
    }

    // Group A on reduced levels {n2'-w+1..n2'} (users 1 and 2 only), group B
    // on reduced levels {1..w} (readable by user 3). The stream in both groups
    // is sent twice by its transmitter.
    std::vector<int> top;
    std::vector<int> bottom;
    for (int i = n2p - width + 1; i <= n2p; ++i) top.push_back(state.physical(i));
    for (int i = 1; i <= width; ++i) bottom.push_back(state.physical(i));

    StreamAssignment sa;
    sa.kind = StrategyKind::cyclic;
    sa.width = width;
    if (d > 0) {
        sa.cycle = CycleDirection::forward;
        sa.streams = {s12, s23, s31};
        sa.groups.push_back({{s12, s23}, top, top});
        sa.groups.push_back({{s23, s31}, bottom, bottom});
    } else {
        sa.cycle = CycleDirection::backward;
        sa.streams = {s13, s32, s21};
        sa.groups.push_back({{s13, s21}, top, top});
        sa.groups.push_back({{s13, s32}, bottom, bottom});
    }
    for (Stream s : sa.streams) at(next.residual, s) -= width;
    std::vector<int> used = top;
    used.insert(used.end(), bottom.begin(), bottom.end());
    next.free_levels = remove_levels(state.free_levels, used);
    next.reduced = access_counts(next.free_levels, state.config);
    out.push_back(std::move(sa));

    const int n2pp = n2p - 2 * width;
    require_counts(next.reduced, {state.reduced[0] - 2 * width, n2pp, std::min(n3p - width, n2pp)}, "cyclic stage");
    return {std::move(next), std::move(out)};
}

// ---------------------------------------------------------------------------
// Stage 3: uni-directional

namespace {

// Reduced levels 1..count, handed out either from the bottom of an access
// class upwards or from its top downwards.
class LevelPool {
public:
    explicit LevelPool(int count) : taken_(static_cast<std::size_t>(count) + 1, false) {}

    std::vector<int> lowest(int width, int limit) {
        std::vector<int> out;
        for (int l = 1; l <= limit && static_cast<int>(out.size()) < width; ++l) take_if_free(l, out);
        return finish(out, width);
    }

    std::vector<int> highest(int width, int limit) {
        std::vector<int> out;
        for (int l = limit; l >= 1 && static_cast<int>(out.size()) < width; --l) take_if_free(l, out);
        std::sort(out.begin(), out.end());
        return finish(out, width);
    }

private:
    void take_if_free(int l, std::vector<int>& out) {
        if (!taken_[static_cast<std::size_t>(l)]) {
            taken_[static_cast<std::size_t>(l)] = true;
            out.push_back(l);
        }
    }

    static std::vector<int> finish(std::vector<int>& out, int width) {
        if (static_cast<int>(out.size()) != width) {
            throw Error(ErrorCode::internal_infeasible, "uni-directional stage ran out of accessible levels");
        }
        return out;
    }

    std::vector<bool> taken_;
};

}  // namespace

std::vector<StreamAssignment> uni_stage(const StageState& state) {
    using enum Stream;
    const IntRates& r = state.residual;
    for (Stream s : {s12, s13, s23}) {
        if (at(r, s) > 0 && at(r, reverse(s)) > 0) {
            throw Error(ErrorCode::precondition_violated, "uni-directional stage input has a bi-directional pair");
        }
    }
    if (std::min({at(r, s12), at(r, s23), at(r, s31)}) > 0 || std::min({at(r, s13), at(r, s32), at(r, s21)}) > 0) {
        throw Error(ErrorCode::precondition_violated, "uni-directional stage input has a cycle");
    }

    const auto [n1r, n2r, n3r] = state.reduced;
    const int total = static_cast<int>(state.free_levels.size());
    if (n1r != total) throw Error(ErrorCode::internal_infeasible, "free levels inconsistent with n1''");

    // Uplink: the weakest senders fill from the bottom of their access class
    // (user 3 first, then user 2); user 1 fills from the top.
    // Downlink: user 3 receives on the lowest levels, user 2 on the highest
    // levels it can still read, user 1 on whatever is left at the top.
    LevelPool uplink(total);
    LevelPool downlink(total);
    std::map<Stream, std::vector<int>> up;
    std::map<Stream, std::vector<int>> down;
    auto width = [&](Stream s) { return static_cast<int>(at(r, s)); };

    for (Stream s : {s32, s31}) up[s] = uplink.lowest(width(s), n3r);
    for (Stream s : {s23, s21}) up[s] = uplink.lowest(width(s), n2r);
    for (Stream s : {s12, s13}) up[s] = uplink.highest(width(s), n1r);

    for (Stream s : {s13, s23}) down[s] = downlink.lowest(width(s), n3r);
    for (Stream s : {s12, s32}) down[s] = downlink.highest(width(s), n2r);
    for (Stream s : {s21, s31}) down[s] = downlink.highest(width(s), n1r);

    std::vector<StreamAssignment> out;
    for (Stream s : kStreams) {
        if (width(s) == 0) continue;
        StreamAssignment sa;
        sa.kind = StrategyKind::unidirectional;
        sa.streams = {s};
        sa.width = width(s);
        LevelGroup g{{s}, {}, {}};
        for (int l : up[s]) g.uplink_levels.push_back(state.physical(l));
        for (int l : down[s]) g.downlink_levels.push_back(state.physical(l));
        sa.groups.push_back(std::move(g));
        out.push_back(std::move(sa));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plan assembly

std::map<int, int> relay_map_of(const std::vector<StreamAssignment>& assignments) {
    std::map<int, int> m;
    for (const auto& sa : assignments) {
        for (const auto& g : sa.groups) {
            for (std::size_t i = 0; i < g.uplink_levels.size() && i < g.downlink_levels.size(); ++i) {
                m.emplace(g.uplink_levels[i], g.downlink_levels[i]);
            }
        }
    }
    return m;
}

std::vector<std::array<int, 6>> bit_offsets(const std::vector<StreamAssignment>& assignments) {
    std::vector<std::array<int, 6>> out;
    std::array<int, 6> next{};
    for (const auto& sa : assignments) {
        out.push_back(next);
        for (Stream s : sa.streams) next[static_cast<std::size_t>(index_of(s))] += sa.width;
    }
    return out;
}

IntRates delivered_rates(const LevelPlan& plan) {
    IntRates out{};
    for (const auto& sa : plan.assignments) {
        for (Stream s : sa.streams) at(out, s) += sa.width;
    }
    return out;
}

LevelPlan build_plan(const RateTuple& rates, const ChannelConfig& config) {
    if (!is_member(rates, outer_bound(config))) {
        throw Error(ErrorCode::not_in_region, "rate tuple " + rates.str() + " is outside the outer bound");
    }
    if (!rates.is_integral()) {
        throw Error(ErrorCode::precondition_violated,
                    "rate tuple " + rates.str() + " is fractional; apply a symbol extension first");
    }

    LevelPlan plan{config, rates.integers(), {}, {}, {}};
    auto [after_bidir, bidir] = bidir_stage(rates, config);
    auto [after_cyclic, cyclic] = cyclic_stage(after_bidir);
    auto uni = uni_stage(after_cyclic);

    for (auto* part : {&bidir, &cyclic, &uni}) {
        for (auto& sa : *part) plan.assignments.push_back(std::move(sa));
    }
    plan.relay_map = relay_map_of(plan.assignments);
    plan.trace = {after_bidir.a,       after_bidir.b,         after_bidir.c,
                  after_cyclic.d,      after_cyclic.e,        after_bidir.reduced,
                  after_cyclic.reduced, after_bidir.residual, after_cyclic.residual};

    validate_plan(plan);
    return plan;
}

// ---------------------------------------------------------------------------
// Validation and decoding schedules

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::invalid_plan, why); }

struct Cell {
    int downlink_level;
    std::vector<BitRef> terms;
};

std::vector<Cell> cells_of(const LevelPlan& plan) {
    std::vector<Cell> cells;
    const auto offsets = bit_offsets(plan.assignments);
    for (std::size_t a = 0; a < plan.assignments.size(); ++a) {
        for (const auto& g : plan.assignments[a].groups) {
            for (std::size_t i = 0; i < g.downlink_levels.size(); ++i) {
                Cell c{g.downlink_levels[i], {}};
                for (Stream s : g.terms) {
                    c.terms.push_back({s, offsets[a][static_cast<std::size_t>(index_of(s))] + static_cast<int>(i)});
                }
                cells.push_back(std::move(c));
            }
        }
    }
    return cells;
}

void check_shape(const StreamAssignment& sa) {
    const std::string kind(to_string(sa.kind));
    if (sa.width <= 0) invalid(kind + " assignment with non-positive width");
    for (const auto& g : sa.groups) {
        if (g.terms.empty() || g.terms.size() > 2) {
            invalid("superposition arity " + std::to_string(g.terms.size()) + " on one level group");
        }
        if (g.terms.size() == 2 && sender(g.terms[0]) == sender(g.terms[1])) {
            invalid("one user sends two streams on the same levels");
        }
        if (static_cast<int>(g.uplink_levels.size()) != sa.width ||
            static_cast<int>(g.downlink_levels.size()) != sa.width) {
            invalid(kind + " group level count differs from width");
        }
        for (Stream t : g.terms) {
            if (std::find(sa.streams.begin(), sa.streams.end(), t) == sa.streams.end()) {
                invalid(kind + " group carries a stream not listed in its assignment");
            }
        }
    }
    switch (sa.kind) {
        case StrategyKind::bidirectional:
            if (sa.streams.size() != 2 || sa.streams[1] != reverse(sa.streams[0]) || sa.groups.size() != 1 ||
                sa.groups[0].terms.size() != 2) {
                invalid("malformed bi-directional assignment");
            }
            break;
        case StrategyKind::cyclic:
            if (sa.streams.size() != 3 || sa.groups.size() != 2 || !sa.cycle) invalid("malformed cyclic assignment");
            break;
        case StrategyKind::unidirectional:
            if (sa.streams.size() != 1 || sa.groups.size() != 1 || sa.groups[0].terms.size() != 1) {
                invalid("malformed uni-directional assignment");
            }
            break;
    }
    if (sa.kind != StrategyKind::unidirectional) {
        for (const auto& g : sa.groups) {
            if (g.uplink_levels != g.downlink_levels) invalid(kind + " assignment must forward on the same levels");
        }
    }
}

}  // namespace

void validate_plan(const LevelPlan& plan) {
    const ChannelConfig& cfg = plan.config;
    std::set<int> up_used;
    std::set<int> down_used;
    for (const auto& sa : plan.assignments) {
        check_shape(sa);
        for (const auto& g : sa.groups) {
            for (std::size_t i = 0; i < g.uplink_levels.size(); ++i) {
                const int u = g.uplink_levels[i];
                const int d = g.downlink_levels[i];
                if (u < 1 || u > cfg.q() || d < 1 || d > cfg.q()) invalid("level outside [1, q]");
                if (!up_used.insert(u).second) invalid("uplink level " + std::to_string(u) + " used twice");
                if (!down_used.insert(d).second) invalid("downlink level " + std::to_string(d) + " used twice");
                for (Stream t : g.terms) {
                    if (!accessible({Direction::uplink, u}, sender(t), cfg)) {
                        invalid("uplink level " + std::to_string(u) + " not accessible to sender of stream " +
                                stream_name(t));
                    }
                }
            }
        }
    }
    if (plan.relay_map != relay_map_of(plan.assignments)) invalid("relay map does not match the assignments");
    if (delivered_rates(plan) != plan.rates) invalid("assignments do not deliver the plan's rates");
    for (User u : kUsers) {
        try {
            decode_schedule(plan, u);
        } catch (const Error& err) {
            invalid(err.what());
        }
    }
}

std::vector<DecodeStep> decode_schedule(const LevelPlan& plan, User j) {
    std::set<BitRef> known;
    std::set<BitRef> wanted;
    for (Stream s : kStreams) {
        for (int i = 0; i < plan.rates[static_cast<std::size_t>(index_of(s))]; ++i) {
            if (sender(s) == j) known.insert({s, i});
            if (receiver(s) == j) wanted.insert({s, i});
        }
    }

    std::vector<Cell> readable;
    for (auto& c : cells_of(plan)) {
        if (accessible({Direction::downlink, c.downlink_level}, j, plan.config)) readable.push_back(std::move(c));
    }

    std::vector<DecodeStep> steps;
    for (int sweep = 0; sweep < 2; ++sweep) {
        for (const auto& c : readable) {
            std::vector<BitRef> unknown;
            std::vector<BitRef> have;
            for (const auto& t : c.terms) (known.contains(t) ? have : unknown).push_back(t);
            if (unknown.size() != 1) continue;
            known.insert(unknown[0]);
            steps.push_back({c.downlink_level, unknown[0], std::move(have)});
        }
    }
    for (const auto& w : wanted) {
        if (!known.contains(w)) {
            throw Error(ErrorCode::unresolvable_chain, "user " + std::to_string(static_cast<int>(j)) +
                                                           " cannot resolve bit " + std::to_string(w.bit) +
                                                           " of stream " + stream_name(w.stream));
        }
    }
    return steps;
}

// ---------------------------------------------------------------------------

SymbolExtension symbol_extension(const RateTuple& rates, const ChannelConfig& config) {
    if (!is_member(rates, outer_bound(config))) {
        throw Error(ErrorCode::not_in_region, "rate tuple " + rates.str() + " is outside the outer bound");
    }
    std::int64_t q = 1;
    for (const auto& r : rates.values()) q = std::lcm(q, r.den());
    SymbolExtension ext{q, rates.scaled(q), config.scaled(static_cast<int>(q))};
    if (!is_member(ext.rates, outer_bound(ext.config))) {
        throw Error(ErrorCode::internal_infeasible, "scaled tuple left the scaled outer bound");
    }
    return ext;
}

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::bidirectional: return "bidirectional";
        case StrategyKind::cyclic: return "cyclic";
        case StrategyKind::unidirectional: return "unidirectional";
    }
    return "unknown";
}

std::string_view to_string(CycleDirection dir) {
    return dir == CycleDirection::forward ? "1->2->3->1" : "1->3->2->1";
}

}  // namespace dyc
