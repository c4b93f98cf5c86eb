#include "dyc/simulator.hpp"

#include <map>
#include <numeric>
#include <random>

namespace dyc {

namespace {

constexpr std::size_t kMaxFailureExamples = 4;
constexpr int kMaxExhaustiveBits = 30;

std::int64_t total_bits(const IntRates& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); }

void check_shape(const MessageSet& m, const IntRates& rates) {
    for (Stream s : kStreams) {
        if (static_cast<std::int64_t>(m[s].size()) != rates[static_cast<std::size_t>(index_of(s))]) {
            throw Error(ErrorCode::invalid_argument, "message for stream " + stream_name(s) +
                                                         " does not match the plan's rate");
        }
    }
}

MessageSet decode_with(const std::vector<DecodeStep>& schedule, const Signal& y_j, User j, const MessageSet& own,
                       const LevelPlan& plan) {
    if (y_j.length() != plan.config.q()) throw Error(ErrorCode::invalid_argument, "observation length != q");
    std::map<BitRef, std::uint8_t> value;
    for (Stream s : kStreams) {
        if (sender(s) != j) continue;
        for (std::size_t i = 0; i < own[s].size(); ++i) value[{s, static_cast<int>(i)}] = own[s][i];
    }
    for (const auto& step : schedule) {
        std::uint8_t bit = y_j.at(observed_position(step.level, j, plan.config));
        for (const auto& k : step.known) bit ^= value.at(k);
        value[step.target] = bit;
    }
    MessageSet out;
    for (Stream s : kStreams) {
        if (receiver(s) != j) continue;
        auto& dst = out[s];
        dst.resize(static_cast<std::size_t>(plan.rates[static_cast<std::size_t>(index_of(s))]));
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = value.at({s, static_cast<int>(i)});
    }
    return out;
}

struct Pipeline {
    const LevelPlan& plan;
    std::array<std::vector<DecodeStep>, 3> schedules;

    explicit Pipeline(const LevelPlan& p) : plan(p) {
        for (User u : kUsers) schedules[static_cast<std::size_t>(index_of(u))] = decode_schedule(p, u);
    }

    MessageSet run(const MessageSet& m) const {
        const auto x = encode(m, plan);
        const Signal y_r = uplink_receive(x[0], x[1], x[2], plan.config);
        const Signal x_r = relay_forward(y_r, plan);
        MessageSet decoded;
        for (User u : kUsers) {
            const Signal y = downlink_receive(x_r, u, plan.config);
            MessageSet mine = decode_with(schedules[static_cast<std::size_t>(index_of(u))], y, u, m, plan);
            for (Stream s : kStreams) {
                if (receiver(s) == u) decoded[s] = std::move(mine[s]);
            }
        }
        return decoded;
    }
};

void record(SimulationReport& report, const MessageSet& sent, const MessageSet& got) {
    ++report.trials;
    bool failed = false;
    for (Stream s : kStreams) {
        if (sent[s] == got[s]) continue;
        failed = true;
        if (report.failure_examples.size() < kMaxFailureExamples) {
            report.failure_examples.push_back({sent, s, sent[s], got[s]});
        }
    }
    if (failed) ++report.failures;
}

}  // namespace

MessageSet MessageSet::zeros(const IntRates& rates) {
    MessageSet m;
    for (std::size_t i = 0; i < 6; ++i) m.bits[i].assign(static_cast<std::size_t>(rates[i]), 0);
    return m;
}

MessageSet message_from_word(const IntRates& rates, std::uint64_t word) {
    MessageSet m = MessageSet::zeros(rates);
    for (auto& stream_bits : m.bits) {
        for (auto& b : stream_bits) {
            b = static_cast<std::uint8_t>(word & 1U);
            word >>= 1U;
        }
    }
    return m;
}

std::array<Signal, 3> encode(const MessageSet& m, const LevelPlan& plan) {
    check_shape(m, plan.rates);
    const ChannelConfig& cfg = plan.config;
    std::array<Signal, 3> x = {Signal::zeros(cfg), Signal::zeros(cfg), Signal::zeros(cfg)};
    const auto offsets = bit_offsets(plan.assignments);
    for (std::size_t a = 0; a < plan.assignments.size(); ++a) {
        for (const auto& g : plan.assignments[a].groups) {
            for (std::size_t i = 0; i < g.uplink_levels.size(); ++i) {
                for (Stream s : g.terms) {
                    const User u = sender(s);
                    const auto bit = static_cast<std::size_t>(offsets[a][static_cast<std::size_t>(index_of(s))]) + i;
                    x[static_cast<std::size_t>(index_of(u))].flip(sender_position(g.uplink_levels[i], u, cfg),
                                                                   m[s].at(bit));
                }
            }
        }
    }
    return x;
}

Signal relay_forward(const Signal& y_r, const LevelPlan& plan) {
    const ChannelConfig& cfg = plan.config;
    if (y_r.length() != cfg.q()) throw Error(ErrorCode::invalid_argument, "relay observation length != q");
    Signal out = Signal::zeros(cfg);
    for (const auto& [up, down] : plan.relay_map) out.set(down, y_r.at(relay_receive_position(up, cfg)));
    return out;
}

MessageSet decode(const Signal& y_j, User j, const MessageSet& own, const LevelPlan& plan) {
    return decode_with(decode_schedule(plan, j), y_j, j, own, plan);
}

MessageSet run_channel_use(const MessageSet& m, const LevelPlan& plan) { return Pipeline(plan).run(m); }

SimulationReport verify_plan(const LevelPlan& plan, const VerifyMode& mode) {
    validate_plan(plan);
    const Pipeline pipeline(plan);
    const std::int64_t bits = total_bits(plan.rates);

    bool exhaustive = false;
    switch (mode.kind) {
        case VerifyMode::Kind::automatic: exhaustive = bits <= mode.exhaustive_threshold; break;
        case VerifyMode::Kind::exhaustive: exhaustive = true; break;
        case VerifyMode::Kind::random: exhaustive = false; break;
    }
    if (exhaustive && bits > kMaxExhaustiveBits) {
        throw Error(ErrorCode::invalid_argument,
                    "exhaustive verification over " + std::to_string(bits) + " bits is not supported");
    }

    SimulationReport report;
    report.exhaustive = exhaustive;
    report.seed = mode.seed;
    if (exhaustive) {
        const std::uint64_t count = std::uint64_t{1} << static_cast<unsigned>(bits);
        for (std::uint64_t w = 0; w < count; ++w) {
            const MessageSet m = message_from_word(plan.rates, w);
            record(report, m, pipeline.run(m));
        }
        return report;
    }

    for (int t = 0; t < mode.trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(mode.seed), static_cast<std::uint32_t>(mode.seed >> 32U),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        MessageSet m = MessageSet::zeros(plan.rates);
        for (auto& stream_bits : m.bits) {
            for (auto& b : stream_bits) b = static_cast<std::uint8_t>(rng() & 1U);
        }
        record(report, m, pipeline.run(m));
    }
    return report;
}

}  // namespace dyc
