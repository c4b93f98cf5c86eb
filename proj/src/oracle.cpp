#include "dyc/oracle.hpp"

#include <algorithm>
#include <random>

namespace dyc::oracle {

namespace {

struct ReferenceBound {
    std::vector<int> support;  // indices into (R12, R13, R21, R23, R31, R32)
    int gain;                  // which n_j bounds it: 1, 2 or 3
};

// R12+R32+R13 <= n2, R12+R32+R31 <= n1, R21+R31+R32 <= n2,
// R21+R31+R23 <= n2, R13+R23+R12 <= n2, R13+R23+R21 <= n1,
// R31+R32 <= n3,     R13+R23 <= n3.
const std::vector<ReferenceBound>& reference_bounds() {
    static const std::vector<ReferenceBound> bounds = {
        {{0, 5, 1}, 2}, {{0, 5, 4}, 1}, {{2, 4, 5}, 2}, {{2, 4, 3}, 2},
        {{1, 3, 0}, 2}, {{1, 3, 2}, 1}, {{4, 5}, 3},    {{1, 3}, 3},
    };
    return bounds;
}

int gain_of(const ChannelConfig& cfg, int j) { return j == 1 ? cfg.n1() : j == 2 ? cfg.n2() : cfg.n3(); }

// min(n_j, n_k) for each stream, in tuple order.
std::array<int, 6> single_caps(const ChannelConfig& cfg) {
    return {cfg.n2(), cfg.n3(), cfg.n2(), cfg.n3(), cfg.n3(), cfg.n3()};
}

int local_rank(std::vector<std::array<Rational, 6>> m) {
    int rank = 0;
    for (std::size_t col = 0; col < 6; ++col) {
        const auto r0 = static_cast<std::size_t>(rank);
        if (r0 >= m.size()) break;
        std::size_t p = r0;
        while (p < m.size() && m[p][col].sign() == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r0]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == r0 || m[r][col].sign() == 0) continue;
            const Rational f = m[r][col] / m[r0][col];
            for (std::size_t c = 0; c < 6; ++c) m[r][c] -= f * m[r0][c];
        }
        ++rank;
    }
    return rank;
}

Rational dot(const std::array<int, 6>& coeffs, const std::array<Rational, 6>& x) {
    Rational s;
    for (std::size_t i = 0; i < 6; ++i) {
        if (coeffs[i] != 0) s += Rational(coeffs[i]) * x[i];
    }
    return s;
}

std::string tuple_str(const IntRates& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

void note(ScanReport& rep, std::string what) {
    ++rep.violation_count;
    if (rep.violations.size() < 8) rep.violations.push_back(std::move(what));
}

}  // namespace

LpOutcome lp_feasible(const std::vector<Inequality>& inequalities, const std::array<Rational, 6>& objective) {
    std::vector<lp::Constraint> rows;
    rows.reserve(inequalities.size());
    for (const auto& ineq : inequalities) {
        rows.push_back({std::vector<Rational>(ineq.coefficients.begin(), ineq.coefficients.end()), lp::Relation::le,
                        Rational(ineq.bound)});
    }
    auto res = lp::maximize(objective, rows, lp::Domain::free);
    return {res.status, res.value};
}

bool reference_member(const std::array<Rational, 6>& r, const ChannelConfig& config) {
    for (const auto& x : r) {
        if (x.sign() < 0) return false;
    }
    for (const auto& b : reference_bounds()) {
        Rational s;
        for (int i : b.support) s += r[static_cast<std::size_t>(i)];
        if (s > Rational(gain_of(config, b.gain))) return false;
    }
    return true;
}

bool reference_member(const IntRates& r, const ChannelConfig& config) {
    for (auto x : r) {
        if (x < 0) return false;
    }
    for (const auto& b : reference_bounds()) {
        std::int64_t s = 0;
        for (int i : b.support) s += r[static_cast<std::size_t>(i)];
        if (s > gain_of(config, b.gain)) return false;
    }
    return true;
}

std::vector<IntRates> reference_integer_points(const ChannelConfig& config) {
    const auto cap = single_caps(config);
    std::vector<IntRates> out;
    IntRates r{};
    for (r[0] = 0; r[0] <= cap[0]; ++r[0])
        for (r[1] = 0; r[1] <= cap[1]; ++r[1])
            for (r[2] = 0; r[2] <= cap[2]; ++r[2])
                for (r[3] = 0; r[3] <= cap[3]; ++r[3])
                    for (r[4] = 0; r[4] <= cap[4]; ++r[4])
                        for (r[5] = 0; r[5] <= cap[5]; ++r[5])
                            if (reference_member(r, config)) out.push_back(r);
    return out;
}

bool in_convex_hull(const std::array<Rational, 6>& point, const std::vector<std::array<Rational, 6>>& hull) {
    if (hull.empty()) return false;
    const std::size_t n = hull.size();
    std::vector<lp::Constraint> rows;
    lp::Constraint total{std::vector<Rational>(n, Rational(1)), lp::Relation::eq, Rational(1)};
    rows.push_back(std::move(total));
    for (std::size_t i = 0; i < 6; ++i) {
        lp::Constraint c{std::vector<Rational>(n), lp::Relation::eq, point[i]};
        for (std::size_t v = 0; v < n; ++v) c.coeffs[v] = hull[v][i];
        rows.push_back(std::move(c));
    }
    return lp::feasible(rows, n, lp::Domain::nonnegative);
}

bool VertexReport::passed() const {
    return hull_disagreements == 0 &&
           std::all_of(points.begin(), points.end(), [](const PointCheck& p) { return p.is_vertex(); });
}

std::vector<std::array<Rational, 6>> sample_points(const ChannelConfig& config,
                                                   const std::vector<std::array<Rational, 6>>& anchors, int count,
                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto cap = single_caps(config);
    std::vector<std::array<Rational, 6>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        std::array<Rational, 6> p;
        if (s % 2 == 0 || anchors.empty()) {
            for (std::size_t i = 0; i < 6; ++i) {
                const std::int64_t den = uniform(1, 6);
                p[i] = Rational(uniform(0, (cap[i] + 1) * den), den);
            }
        } else {
            // Convex combination of up to three anchors, then scaled by a
            // factor in [1/2, 5/4] so that roughly half land outside.
            const std::int64_t parts = 12;
            std::int64_t left = parts;
            for (int k = 0; k < 3; ++k) {
                const std::int64_t w = k == 2 ? left : uniform(0, left);
                left -= w;
                const auto& a = anchors[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(anchors.size()) - 1))];
                for (std::size_t i = 0; i < 6; ++i) p[i] += a[i] * Rational(w, parts);
            }
            const Rational scale(uniform(4, 10), 8);
            for (auto& x : p) x *= scale;
        }
        out.push_back(p);
    }
    return out;
}

VertexReport vertex_validate(const Region& region, const std::vector<RateTuple>& points, int hull_samples,
                             std::uint64_t seed) {
    VertexReport rep;
    auto direct_member = [&](const std::array<Rational, 6>& x) {
        return std::all_of(region.inequalities.begin(), region.inequalities.end(),
                           [&](const Inequality& ineq) { return dot(ineq.coefficients, x) <= Rational(ineq.bound); });
    };
    std::vector<std::array<Rational, 6>> hull;
    for (const auto& pt : points) {
        PointCheck pc{pt, direct_member(pt.values()), 0};
        std::vector<std::array<Rational, 6>> tight;
        for (const auto& ineq : region.inequalities) {
            if (dot(ineq.coefficients, pt.values()) == Rational(ineq.bound)) {
                std::array<Rational, 6> row;
                for (std::size_t i = 0; i < 6; ++i) row[i] = ineq.coefficients[i];
                tight.push_back(row);
            }
        }
        pc.tight_rank = local_rank(std::move(tight));
        rep.points.push_back(pc);
        hull.push_back(pt.values());
    }
    if (hull_samples > 0) {
        for (const auto& x : sample_points(region.config, hull, hull_samples, seed)) {
            ++rep.hull_samples;
            const bool direct = direct_member(x);
            rep.hull_members += direct;
            if (direct != in_convex_hull(x, hull)) ++rep.hull_disagreements;
        }
    }
    return rep;
}

bool accounting_holds(const StreamAssignment& sa) {
    const int bits = sa.bits_delivered();
    const int levels = sa.levels_used();
    switch (sa.kind) {
        case StrategyKind::bidirectional: return bits == 2 * levels;
        case StrategyKind::cyclic: return 2 * bits == 3 * levels;
        case StrategyKind::unidirectional: return bits == levels;
    }
    return false;
}

namespace {

void check_point(ScanReport& rep, const IntRates& r, const ChannelConfig& config, const ScanLimits& limits) {
    LevelPlan plan = build_plan(RateTuple::from_integers(r), config);
    ++rep.planned;

    std::int64_t delivered_bits = 0;
    for (const auto& sa : plan.assignments) {
        ++rep.accounting_checked;
        delivered_bits += sa.bits_delivered();
        if (!accounting_holds(sa)) {
            ++rep.accounting_failures;
            note(rep, "rate-per-level accounting broken for " + std::string(to_string(sa.kind)) + " on " +
                          tuple_str(r));
        }
    }
    std::int64_t levels = 0;
    for (const auto& sa : plan.assignments) levels += sa.levels_used();
    if (levels > config.n1()) note(rep, "plan uses more than n1 levels on " + tuple_str(r));
    std::int64_t want = 0;
    for (auto x : r) want += x;
    if (delivered_bits != want || delivered_rates(plan) != r) note(rep, "plan delivers wrong rates on " + tuple_str(r));

    VerifyMode mode = limits.verify;
    mode.seed = limits.seed;
    const auto sim = verify_plan(plan, mode);
    rep.trials += sim.trials;
    if (sim.passed()) {
        ++rep.verified;
    } else {
        note(rep, "simulation failed on " + tuple_str(r) + " (" + std::to_string(sim.failures) + " of " +
                      std::to_string(sim.trials) + " trials)");
    }
}

}  // namespace

ScanReport achievability_scan(const ChannelConfig& config, const ScanLimits& limits) {
    ScanReport rep{config};
    auto points = reference_integer_points(config);
    rep.integer_points = static_cast<std::int64_t>(points.size());

    if (limits.max_points >= 0 && static_cast<std::size_t>(limits.max_points) < points.size()) {
        std::mt19937_64 rng(limits.seed);
        std::shuffle(points.begin(), points.end(), rng);
        points.resize(static_cast<std::size_t>(limits.max_points));
    }
    for (const auto& r : points) {
        try {
            check_point(rep, r, config, limits);
        } catch (const Error& err) {
            note(rep, "planning failed on " + tuple_str(r) + ": " + err.what());
        }
    }

    auto probes = soundness_probes(config, limits.outside_probes, limits.seed);
    rep.probes = probes.probes;
    rep.probes_rejected = probes.rejected;
    for (auto& v : probes.violations) note(rep, std::move(v));
    return rep;
}

ProbeReport soundness_probes(const ChannelConfig& config, int count, std::uint64_t seed) {
    ProbeReport rep;
    const auto members = reference_integer_points(config);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto& bounds = reference_bounds();
    for (int p = 0; p < count; ++p) {
        IntRates r = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        const auto& b = bounds[std::uniform_int_distribution<std::size_t>(0, bounds.size() - 1)(rng)];
        std::int64_t lhs = 0;
        for (int i : b.support) lhs += r[static_cast<std::size_t>(i)];
        const int k = b.support[std::uniform_int_distribution<std::size_t>(0, b.support.size() - 1)(rng)];
        r[static_cast<std::size_t>(k)] += gain_of(config, b.gain) - lhs + 1;

        ++rep.probes;
        if (reference_member(r, config)) {
            rep.violations.push_back("probe " + tuple_str(r) + " is not outside the bound");
            continue;
        }
        try {
            build_plan(RateTuple::from_integers(r), config);
            rep.violations.push_back("planner accepted out-of-bound " + tuple_str(r));
        } catch (const Error& err) {
            if (err.code() == ErrorCode::not_in_region) {
                ++rep.rejected;
            } else {
                rep.violations.push_back("planner rejected " + tuple_str(r) + " with " +
                                         std::string(to_string(err.code())));
            }
        }
    }
    return rep;
}

}  // namespace dyc::oracle
