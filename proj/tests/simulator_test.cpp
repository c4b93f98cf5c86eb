#include <doctest.h>

#include <random>

#include "dyc/simulator.hpp"

using namespace dyc;
using enum Stream;

namespace {

RateTuple ints(std::array<std::int64_t, 6> v) { return RateTuple::from_integers(v); }

Signal bits(std::initializer_list<int> b) {
    std::vector<std::uint8_t> v;
    for (int x : b) v.push_back(static_cast<std::uint8_t>(x));
    return Signal(v);
}

MessageSet random_messages(const IntRates& rates, std::mt19937_64& rng) {
    MessageSet m = MessageSet::zeros(rates);
    for (auto& stream : m.bits) {
        for (auto& b : stream) b = static_cast<std::uint8_t>(rng() & 1U);
    }
    return m;
}

MessageSet xor_of(const MessageSet& a, const MessageSet& b) {
    MessageSet out = a;
    for (std::size_t s = 0; s < 6; ++s) {
        for (std::size_t i = 0; i < out.bits[s].size(); ++i) out.bits[s][i] ^= b.bits[s][i];
    }
    return out;
}

}  // namespace

TEST_CASE("encode") {
    SUBCASE("empty plan") {
        const LevelPlan p = build_plan(ints({0, 0, 0, 0, 0, 0}), {4, 3, 2});
        const auto x = encode(MessageSet::zeros(p.rates), p);
        for (const auto& s : x) CHECK(s == Signal::zeros(p.config));
    }
    SUBCASE("bi-directional on level 3 of (4,3,2)") {
        const LevelPlan p = build_plan(ints({1, 0, 1, 0, 0, 0}), {4, 3, 2});
        REQUIRE(p.assignments.at(0).groups.at(0).uplink_levels == std::vector<int>{3});
        MessageSet m = MessageSet::zeros(p.rates);
        m[s12] = {1};
        m[s21] = {1};
        const auto x = encode(m, p);
        CHECK(x[0] == bits({0, 1, 0, 0}));
        CHECK(x[1] == bits({1, 0, 0, 0}));
        CHECK(x[2] == Signal::zeros(p.config));
    }
    SUBCASE("the cyclic repeater sends its bit twice") {
        const LevelPlan c = build_plan(ints({1, 0, 0, 1, 1, 0}), {2, 2, 1});
        MessageSet m = MessageSet::zeros(c.rates);
        m[s23] = {1};
        const auto x = encode(m, c);
        // Uplink levels 2 and 1 for user 2 (n2 = 2) are sender positions 1 and 2.
        CHECK(x[1] == bits({1, 1}));
        CHECK(x[0] == Signal::zeros(c.config));
    }
    SUBCASE("shape mismatch") {
        const LevelPlan p = build_plan(ints({1, 0, 1, 0, 0, 0}), {4, 3, 2});
        CHECK_THROWS_AS(encode(MessageSet::zeros({2, 0, 1, 0, 0, 0}), p), Error);
    }
}

TEST_CASE("relay_forward") {
    SUBCASE("same-level forwarding") {
        const LevelPlan p = build_plan(ints({1, 0, 1, 0, 0, 0}), {4, 3, 2});
        // Uplink level 3 is received at position 2; downlink level 3 is transmit position 3.
        CHECK(relay_forward(bits({0, 1, 0, 0}), p) == bits({0, 0, 1, 0}));
    }
    SUBCASE("uni-directional permutation on (3,3,2)") {
        const LevelPlan p = build_plan(ints({1, 1, 0, 1, 0, 0}), {3, 3, 2});
        CHECK(p.relay_map == std::map<int, int>{{1, 2}, {2, 1}, {3, 3}});
        // Received uplink levels (1,2,3) sit at positions (3,2,1).
        const Signal y = bits({1, 0, 0});  // x12 on uplink level 3
        CHECK(relay_forward(y, p) == bits({0, 0, 1}));
        CHECK(relay_forward(bits({0, 0, 1}), p) == bits({0, 1, 0}));  // x23: level 1 -> 2
        CHECK(relay_forward(bits({0, 1, 0}), p) == bits({1, 0, 0}));  // x13: level 2 -> 1
    }
    SUBCASE("zeros") {
        const LevelPlan p = build_plan(ints({1, 1, 1, 1, 1, 1}), {4, 3, 2});
        CHECK(relay_forward(Signal::zeros(p.config), p) == Signal::zeros(p.config));
    }
}

TEST_CASE("decode") {
    SUBCASE("bi-directional cancellation") {
        const LevelPlan p = build_plan(ints({1, 0, 1, 0, 0, 0}), {4, 3, 2});
        MessageSet m = MessageSet::zeros(p.rates);
        m[s12] = {1};
        const MessageSet got = run_channel_use(m, p);
        CHECK(got[s12] == std::vector<std::uint8_t>{1});
        CHECK(got[s21] == std::vector<std::uint8_t>{0});
    }
    SUBCASE("cyclic chain at user 1") {
        const LevelPlan p = build_plan(ints({1, 0, 0, 1, 1, 0}), {2, 2, 1});
        MessageSet m = MessageSet::zeros(p.rates);
        m[s12] = {1};
        m[s23] = {1};
        m[s31] = {0};
        const auto x = encode(m, p);
        const Signal y_r = uplink_receive(x[0], x[1], x[2], p.config);
        const Signal y1 = downlink_receive(relay_forward(y_r, p), User::u1, p.config);
        MessageSet own = MessageSet::zeros(p.rates);
        own[s12] = m[s12];
        const MessageSet got = decode(y1, User::u1, own, p);
        CHECK(got[s31] == std::vector<std::uint8_t>{0});
        CHECK(run_channel_use(m, p) == m);
    }
    SUBCASE("a stream split across two strategies keeps its bits apart") {
        // R21 = 2: one bit paired with x12, the other forwarded on its own.
        const LevelPlan p = build_plan(ints({1, 0, 2, 0, 0, 0}), {2, 2, 0});
        REQUIRE(p.assignments.size() == 2);
        MessageSet m = MessageSet::zeros(p.rates);
        m[s21] = {0, 1};
        CHECK(run_channel_use(m, p) == m);
        m[s21] = {1, 0};
        m[s12] = {1};
        CHECK(run_channel_use(m, p) == m);
    }
    SUBCASE("all zero") {
        const LevelPlan p = build_plan(ints({1, 1, 1, 1, 1, 1}), {4, 3, 2});
        const MessageSet z = MessageSet::zeros(p.rates);
        CHECK(run_channel_use(z, p) == z);
    }
}

TEST_CASE("verify_plan") {
    SUBCASE("zero-rate plan passes with one trial") {
        const auto rep = verify_plan(build_plan(ints({0, 0, 0, 0, 0, 0}), {4, 3, 2}));
        CHECK(rep.trials == 1);
        CHECK(rep.passed());
    }
    SUBCASE("all ones on (4,3,2) exhaustively") {
        const auto rep = verify_plan(build_plan(ints({1, 1, 1, 1, 1, 1}), {4, 3, 2}));
        CHECK(rep.exhaustive);
        CHECK(rep.trials == 64);
        CHECK(rep.failures == 0);
    }
    SUBCASE("random mode is seeded") {
        const LevelPlan p = build_plan(ints({2, 2, 2, 2, 2, 2}), {6, 6, 6});
        VerifyMode mode;
        mode.kind = VerifyMode::Kind::random;
        mode.seed = 99;
        mode.trials = 50;
        const auto rep = verify_plan(p, mode);
        CHECK_FALSE(rep.exhaustive);
        CHECK(rep.trials == 50);
        CHECK(rep.seed == 99);
        CHECK(rep.passed());
    }
    SUBCASE("a corrupted plan is refused before simulation") {
        LevelPlan p = build_plan(ints({1, 1, 1, 1, 1, 1}), {4, 3, 2});
        p.assignments[0].groups[0].terms.push_back(s31);
        try {
            verify_plan(p);
            FAIL("expected INVALID_PLAN");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_plan);
        }
    }
}

TEST_CASE("every plan up to n1 = 4 decodes exhaustively") {
    for (int n1 = 1; n1 <= 4; ++n1) {
        for (int n2 = 1; n2 <= n1; ++n2) {
            for (int n3 = 0; n3 <= n2; ++n3) {
                const ChannelConfig c(n1, n2, n3);
                for (const auto& r : integer_points(outer_bound(c))) {
                    const auto rep = verify_plan(build_plan(r, c));
                    CHECK_MESSAGE(rep.passed(), r.str() << " on (" << n1 << "," << n2 << "," << n3 << ")");
                }
            }
        }
    }
}

TEST_CASE("the pipeline is linear") {
    std::mt19937_64 rng(17);
    for (const auto& [rates, cfg] : std::vector<std::pair<RateTuple, ChannelConfig>>{
             {ints({1, 1, 1, 1, 1, 1}), {4, 3, 2}},
             {ints({2, 0, 0, 2, 2, 0}), {5, 4, 2}},
             {ints({0, 1, 2, 0, 1, 1}), {4, 4, 3}},
             {ints({2, 1, 0, 1, 0, 0}), {5, 4, 2}}}) {
        const LevelPlan p = build_plan(rates, cfg);
        for (int t = 0; t < 50; ++t) {
            const MessageSet a = random_messages(p.rates, rng);
            const MessageSet b = random_messages(p.rates, rng);
            CHECK(run_channel_use(xor_of(a, b), p) == xor_of(run_channel_use(a, p), run_channel_use(b, p)));
        }
    }
}
