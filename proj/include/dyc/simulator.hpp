#pragma once

// End-to-end execution of a LevelPlan over the deterministic channel, one
// channel use per trial: encode -> uplink superposition -> relay forwarding
// -> downlink clipping -> decode.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyc/channel.hpp"
#include "dyc/scheme.hpp"

namespace dyc {

/// bits[s] holds R_s message bits of stream s for one channel use.
struct MessageSet {
    std::array<std::vector<std::uint8_t>, 6> bits;

    static MessageSet zeros(const IntRates& rates);
    [[nodiscard]] const std::vector<std::uint8_t>& operator[](Stream s) const {
        return bits[static_cast<std::size_t>(index_of(s))];
    }
    std::vector<std::uint8_t>& operator[](Stream s) { return bits[static_cast<std::size_t>(index_of(s))]; }

    friend bool operator==(const MessageSet&, const MessageSet&) = default;
};

/// Fills m from the low bits of `word`, stream by stream in tuple order.
MessageSet message_from_word(const IntRates& rates, std::uint64_t word);

/// The three users' transmit signals.
std::array<Signal, 3> encode(const MessageSet& m, const LevelPlan& plan);

/// Relay transmit signal: for each relay_map pair u -> d, transmit position d
/// carries received position q - u + 1.
Signal relay_forward(const Signal& y_r, const LevelPlan& plan);

/// Streams destined to user j, recovered from its downlink observation and
/// its own transmitted messages. Entries for other streams are left empty.
MessageSet decode(const Signal& y_j, User j, const MessageSet& own, const LevelPlan& plan);

/// Per-user decoded streams for a full channel use.
MessageSet run_channel_use(const MessageSet& m, const LevelPlan& plan);

struct VerifyMode {
    enum class Kind { automatic, exhaustive, random };
    Kind kind = Kind::automatic;
    std::uint64_t seed = 0;
    int trials = 256;
    int exhaustive_threshold = 12;  // total bits
};

struct FailureExample {
    MessageSet sent;
    Stream stream;
    std::vector<std::uint8_t> expected;
    std::vector<std::uint8_t> decoded;
};

struct SimulationReport {
    std::int64_t trials = 0;
    std::int64_t failures = 0;
    std::vector<FailureExample> failure_examples;  // first few only
    bool exhaustive = false;
    std::uint64_t seed = 0;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Validates the plan (throws Error(invalid_plan) before any trial runs),
/// then simulates. Automatic mode is exhaustive when the plan carries at most
/// exhaustive_threshold bits, otherwise `trials` seeded random message sets.
SimulationReport verify_plan(const LevelPlan& plan, const VerifyMode& mode = {});

}  // namespace dyc
