#include "dyc/channel.hpp"

#include <string>

namespace dyc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
        case ErrorCode::not_in_region: return "NOT_IN_REGION";
        case ErrorCode::precondition_violated: return "PRECONDITION_VIOLATED";
        case ErrorCode::internal_infeasible: return "INTERNAL_INFEASIBLE";
        case ErrorCode::invalid_plan: return "INVALID_PLAN";
        case ErrorCode::unresolvable_chain: return "UNRESOLVABLE_CHAIN";
    }
    return "UNKNOWN";
}

User user_from_int(int id) {
    if (id < 1 || id > 3) throw Error(ErrorCode::invalid_argument, "invalid user id " + std::to_string(id));
    return static_cast<User>(id);
}

ChannelConfig::ChannelConfig(int n1, int n2, int n3) : gains_{n1, n2, n3} {
    if (n3 < 0 || n2 < n3 || n1 < n2) {
        throw Error(ErrorCode::invalid_argument,
                    "channel gains must satisfy n1 >= n2 >= n3 >= 0, got (" + std::to_string(n1) + ", " +
                        std::to_string(n2) + ", " + std::to_string(n3) + ")");
    }
}

ChannelConfig ChannelConfig::scaled(int factor) const {
    if (factor < 1) throw Error(ErrorCode::invalid_argument, "extension factor must be positive");
    return {factor * n1(), factor * n2(), factor * n3()};
}

Signal::Signal(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b &= 1U;
}

std::uint8_t Signal::at(int position) const {
    if (position < 1 || position > length()) {
        throw Error(ErrorCode::invalid_argument, "signal position " + std::to_string(position) + " out of range");
    }
    return bits_[static_cast<std::size_t>(position - 1)];
}

void Signal::set(int position, std::uint8_t bit) {
    if (position < 1 || position > length()) {
        throw Error(ErrorCode::invalid_argument, "signal position " + std::to_string(position) + " out of range");
    }
    bits_[static_cast<std::size_t>(position - 1)] = bit & 1U;
}

void Signal::flip(int position, std::uint8_t bit) { set(position, at(position) ^ (bit & 1U)); }

Signal& Signal::operator^=(const Signal& other) {
    if (other.length() != length()) throw Error(ErrorCode::invalid_argument, "signal length mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
}

Signal shift_apply(const Signal& x, int gain, const ChannelConfig& config) {
    const int q = config.q();
    if (x.length() != q) throw Error(ErrorCode::invalid_argument, "signal length does not match q");
    if (gain < 0 || gain > q) throw Error(ErrorCode::invalid_argument, "gain out of range [0, q]");
    const int shift = q - gain;
    Signal out(q);
    for (int p = shift + 1; p <= q; ++p) out.set(p, x.at(p - shift));
    return out;
}

Signal uplink_receive(const Signal& x1, const Signal& x2, const Signal& x3, const ChannelConfig& config) {
    Signal y = shift_apply(x1, config.n1(), config);
    y ^= shift_apply(x2, config.n2(), config);
    y ^= shift_apply(x3, config.n3(), config);
    return y;
}

Signal downlink_receive(const Signal& x_r, User j, const ChannelConfig& config) {
    return shift_apply(x_r, config.gain(user_from_int(static_cast<int>(j))), config);
}

bool accessible(LevelIndex level, User j, const ChannelConfig& config) {
    return level.level >= 1 && level.level <= config.gain(j);
}

int relay_receive_position(int level, const ChannelConfig& config) {
    if (level < 1 || level > config.q()) throw Error(ErrorCode::invalid_argument, "level out of range");
    return config.q() - level + 1;
}

int sender_position(int level, User j, const ChannelConfig& config) {
    if (level < 1 || level > config.gain(j)) {
        throw Error(ErrorCode::invalid_argument, "uplink level " + std::to_string(level) +
                                                     " not accessible to user " + std::to_string(static_cast<int>(j)));
    }
    return config.gain(j) - level + 1;
}

int observed_position(int level, User j, const ChannelConfig& config) {
    if (level < 1 || level > config.gain(j)) {
        throw Error(ErrorCode::invalid_argument, "downlink level " + std::to_string(level) +
                                                     " not accessible to user " + std::to_string(static_cast<int>(j)));
    }
    return level + config.q() - config.gain(j);
}

}  // namespace dyc
