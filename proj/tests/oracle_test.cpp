#include <doctest.h>

#include "dyc/oracle.hpp"

using namespace dyc;
using namespace dyc::oracle;

namespace {

std::array<Rational, 6> unit(std::size_t i) {
    std::array<Rational, 6> v{};
    v[i] = Rational(1);
    return v;
}

std::vector<std::array<Rational, 6>> vertex_points(const Region& r) {
    std::vector<std::array<Rational, 6>> out;
    for (const auto& v : vertices(r)) out.push_back(v.point.values());
    return out;
}

}  // namespace

TEST_CASE("lp_feasible") {
    const Region r = outer_bound({4, 3, 2});
    auto best = lp_feasible(r.inequalities, unit(0));
    REQUIRE(best.status == lp::Status::optimal);
    CHECK(best.value == Rational(3));

    auto cs3 = lp_feasible(r.inequalities, {0, 0, 0, 0, 1, 1});
    REQUIRE(cs3.status == lp::Status::optimal);
    CHECK(cs3.value == Rational(2));

    auto zero = lp_feasible(r.inequalities, {});
    REQUIRE(zero.status == lp::Status::optimal);
    CHECK(zero.value == Rational(0));

    // Without the non-negativity rows the triple sums alone leave R12 unbounded below.
    CHECK(lp_feasible(r.substantive(), {-1, 0, 0, 0, 0, 0}).status == lp::Status::unbounded);
    std::vector<Inequality> contradiction = {{{1, 0, 0, 0, 0, 0}, -1, {Label::Kind::single}},
                                             {{-1, 0, 0, 0, 0, 0}, 0, {Label::Kind::nonneg}}};
    CHECK(lp_feasible(contradiction, {}).status == lp::Status::infeasible);
}

TEST_CASE("reference membership agrees with the region module") {
    for (int n1 = 0; n1 <= 6; ++n1) {
        for (int n2 = 0; n2 <= n1; ++n2) {
            for (int n3 = 0; n3 <= n2; ++n3) {
                const ChannelConfig c(n1, n2, n3);
                const auto ref = reference_integer_points(c);
                const auto mine = integer_points(outer_bound(c));
                REQUIRE(ref.size() == mine.size());
                for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ref[i] == mine[i].integers());
            }
        }
    }
    CHECK(reference_integer_points({1, 1, 1}).size() == 10);
    CHECK(reference_integer_points({4, 3, 2}).size() == 190);
}

TEST_CASE("vertex_validate") {
    SUBCASE("origin of (0,0,0)") {
        const Region r = outer_bound({0, 0, 0});
        const auto rep = vertex_validate(r, {RateTuple::from_integers({0, 0, 0, 0, 0, 0})});
        REQUIRE(rep.points.size() == 1);
        CHECK(rep.points[0].is_vertex());
        CHECK(rep.passed());
    }
    SUBCASE("(2,2,2): the all-2/3 point is feasible with tight rank 4") {
        const Region r = outer_bound({2, 2, 2});
        const RateTuple sym({Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(2, 3),
                             Rational(2, 3)});
        const auto rep = vertex_validate(r, {sym});
        CHECK(rep.points[0].feasible);
        CHECK(rep.points[0].tight_rank == 4);
        CHECK_FALSE(rep.points[0].is_vertex());
        CHECK_FALSE(rep.passed());
    }
    SUBCASE("an interior member is not a vertex") {
        const Region r = outer_bound({4, 3, 2});
        const auto rep = vertex_validate(r, {RateTuple::from_integers({1, 0, 1, 0, 0, 0})});
        CHECK(rep.points[0].feasible);
        CHECK(rep.points[0].tight_rank < 6);
        CHECK_FALSE(rep.points[0].is_vertex());
    }
    SUBCASE("enumerated vertices pass, with hull sampling") {
        for (ChannelConfig c : {ChannelConfig(1, 1, 1), ChannelConfig(4, 3, 2), ChannelConfig(3, 2, 0)}) {
            const Region r = outer_bound(c);
            std::vector<RateTuple> pts;
            for (const auto& v : vertices(r)) pts.push_back(v.point);
            const auto rep = vertex_validate(r, pts, 200, 7);
            CHECK(rep.passed());
            CHECK(rep.hull_samples == 200);
            CHECK(rep.hull_members > 20);
            CHECK(rep.hull_members < 180);
        }
    }
}

TEST_CASE("convex hull membership") {
    const Region r = outer_bound({1, 1, 1});
    const auto hull = vertex_points(r);
    CHECK(in_convex_hull({Rational(1, 4), 0, Rational(1, 4), 0, 0, 0}, hull));
    CHECK(in_convex_hull({Rational(1, 2), Rational(1, 2), Rational(1, 2), 0, 0, 0}, hull));
    CHECK_FALSE(in_convex_hull({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), 0, 0}, hull));
    CHECK_FALSE(in_convex_hull({Rational(-1, 10), 0, 0, 0, 0, 0}, hull));
}

TEST_CASE("linear objectives peak at an enumerated vertex") {
    const Region r = outer_bound({5, 3, 2});
    const auto vs = vertex_points(r);
    const std::vector<std::array<Rational, 6>> objectives = {
        {1, 2, 3, 4, 5, 6}, {3, -1, 2, 0, 1, 1}, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 0}, {2, 3, 2, 3, 1, 1}};
    for (const auto& obj : objectives) {
        const auto best = lp_feasible(r.inequalities, obj);
        REQUIRE(best.status == lp::Status::optimal);
        Rational top(-1000);
        for (const auto& v : vs) {
            Rational s(0);
            for (std::size_t i = 0; i < 6; ++i) s = s + obj[i] * v[i];
            top = std::max(top, s);
        }
        CHECK(top == best.value);
    }
}

TEST_CASE("achievability scans") {
    SUBCASE("(1,1,1)") {
        const auto rep = achievability_scan({1, 1, 1});
        CHECK(rep.integer_points == 10);
        CHECK(rep.planned == 10);
        CHECK(rep.verified == 10);
        CHECK(rep.probes == 64);
        CHECK(rep.probes_rejected == 64);
        CHECK(rep.passed());
    }
    SUBCASE("(4,3,2)") {
        const auto rep = achievability_scan({4, 3, 2});
        CHECK(rep.integer_points == 190);
        CHECK(rep.verified == 190);
        CHECK(rep.passed());
    }
    SUBCASE("sampling") {
        ScanLimits limits;
        limits.max_points = 25;
        const auto rep = achievability_scan({5, 5, 3}, limits);
        CHECK(rep.planned == 25);
        CHECK(rep.passed());
    }
}

TEST_CASE("soundness probes") {
    const auto rep = soundness_probes({4, 3, 2}, 300, 5);
    CHECK(rep.probes == 300);
    CHECK(rep.passed());
    // R12 = 4 exceeds min(n1, n2) = 3.
    try {
        build_plan(RateTuple::from_integers({4, 0, 0, 0, 0, 0}), {4, 3, 2});
        FAIL("planner accepted (4,0,0,0,0,0)");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_in_region);
    }
}

TEST_CASE("accounting") {
    const LevelPlan p = build_plan(RateTuple::from_integers({2, 1, 1, 1, 1, 0}), {5, 4, 2});
    for (const auto& sa : p.assignments) CHECK(accounting_holds(sa));
    StreamAssignment broken = p.assignments.front();
    broken.width += 1;
    CHECK_FALSE(accounting_holds(broken));
}
