#pragma once

// Linear shift deterministic Y-channel: three users, one relay, no direct
// links. Each user j sees the relay through a reciprocal gain of n_j
// bit-levels; only the top n_j bits of a transmitted vector survive.
//
// Relay level conventions used throughout the library:
//   uplink level l    <-> relay received position q - l + 1 (level 1 = bottom)
//   downlink level l  <-> relay transmit position l         (level 1 = top)
// With these, level l is accessible to user j in either direction iff l <= n_j.
// Positions are 1-based, position 1 being the most significant (top) bit.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dyc/error.hpp"

namespace dyc {

enum class User : int { u1 = 1, u2 = 2, u3 = 3 };

inline constexpr std::array<User, 3> kUsers = {User::u1, User::u2, User::u3};

constexpr int index_of(User u) { return static_cast<int>(u) - 1; }

/// Throws Error(invalid_argument) unless 1 <= id <= 3.
User user_from_int(int id);

/// Channel gains (n1, n2, n3) with n1 >= n2 >= n3 >= 0. q = n1.
class ChannelConfig {
public:
    /// Rejects unordered or negative gains; they are never sorted silently.
    ChannelConfig(int n1, int n2, int n3);

    [[nodiscard]] int n1() const { return gains_[0]; }
    [[nodiscard]] int n2() const { return gains_[1]; }
    [[nodiscard]] int n3() const { return gains_[2]; }
    [[nodiscard]] int q() const { return gains_[0]; }
    [[nodiscard]] int gain(User u) const { return gains_[index_of(u)]; }

    /// All gains multiplied by factor (a Q-fold symbol extension).
    [[nodiscard]] ChannelConfig scaled(int factor) const;

    friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;

private:
    std::array<int, 3> gains_;
};

/// Binary vector over GF(2), one entry per physical position (1 = top).
class Signal {
public:
    Signal() = default;
    explicit Signal(int length) : bits_(static_cast<std::size_t>(length), 0) {}
    explicit Signal(std::vector<std::uint8_t> bits);

    static Signal zeros(const ChannelConfig& config) { return Signal(config.q()); }

    [[nodiscard]] int length() const { return static_cast<int>(bits_.size()); }
    [[nodiscard]] std::span<const std::uint8_t> bits() const { return bits_; }

    /// 1-based position access.
    [[nodiscard]] std::uint8_t at(int position) const;
    void set(int position, std::uint8_t bit);
    void flip(int position, std::uint8_t bit);

    Signal& operator^=(const Signal& other);
    friend Signal operator^(Signal a, const Signal& b) { return a ^= b; }
    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

enum class Direction { uplink, downlink };

struct LevelIndex {
    Direction direction;
    int level;
};

/// Multiplication by the shift matrix S^(q - gain): position p of the output
/// is position p - (q - gain) of the input, or 0 when that falls off the top.
Signal shift_apply(const Signal& x, int gain, const ChannelConfig& config);

/// Relay observation: GF(2) sum of each user's signal shifted by its gain.
Signal uplink_receive(const Signal& x1, const Signal& x2, const Signal& x3, const ChannelConfig& config);

/// What user j observes when the relay transmits x_r.
Signal downlink_receive(const Signal& x_r, User j, const ChannelConfig& config);

bool accessible(LevelIndex level, User j, const ChannelConfig& config);

// Position helpers for the level conventions above.

/// Relay received position of uplink level l.
int relay_receive_position(int level, const ChannelConfig& config);
/// Position at which user j must place a bit to hit uplink level l. Requires l <= n_j.
int sender_position(int level, User j, const ChannelConfig& config);
/// Position in user j's observation that carries downlink level l. Requires l <= n_j.
int observed_position(int level, User j, const ChannelConfig& config);

}  // namespace dyc
