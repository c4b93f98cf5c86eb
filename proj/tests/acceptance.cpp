// Acceptance run: one PASS/FAIL line per criterion, each with its wall time
// against its budget. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dyc/json_io.hpp"
#include "dyc/oracle.hpp"

using namespace dyc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

template <typename F>
void for_configs(int max_n1, int min_n3, F&& f) {
    for (int n1 = 0; n1 <= max_n1; ++n1) {
        for (int n2 = 0; n2 <= n1; ++n2) {
            for (int n3 = min_n3; n3 <= n2; ++n3) f(ChannelConfig(n1, n2, n3));
        }
    }
}

std::string cfg_str(const ChannelConfig& c) {
    return "(" + std::to_string(c.n1()) + "," + std::to_string(c.n2()) + "," + std::to_string(c.n3()) + ")";
}

Outcome outer_bound_golden() {
    const std::string path = std::string(DYC_GOLDEN_DIR) + "/region_4_3_2.json";
    std::ifstream f(path);
    if (!f) return {false, "cannot read " + path};
    const auto golden = nlohmann::json::parse(f).at("region");
    const auto emitted = dyc::json::to_json(outer_bound({4, 3, 2}));
    if (emitted != golden) return {false, "emitted region differs from " + path};
    const auto n = emitted.at("inequalities").size();
    return {n == 8, std::to_string(n) + " substantive inequalities, identical to the golden file"};
}

Outcome redundancy_theorem() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-6, 6);
    int configs = 0;
    std::int64_t points = 0;
    int objectives = 0;
    std::ostringstream bad;
    for_configs(8, 0, [&](const ChannelConfig& c) {
        ++configs;
        const Region outer = outer_bound(c);
        const Region both = intersect(outer, cutset_bounds(c));
        const auto a = integer_points(outer);
        const auto b = integer_points(both);
        points += static_cast<std::int64_t>(a.size());
        if (a != b) bad << " integer points differ on " << cfg_str(c) << ";";
        for (int k = 0; k < 50; ++k) {
            std::array<Rational, 6> obj;
            for (auto& x : obj) x = Rational(coef(rng));
            const auto x = oracle::lp_feasible(outer.inequalities, obj);
            const auto y = oracle::lp_feasible(both.inequalities, obj);
            ++objectives;
            if (x.status != lp::Status::optimal || y.status != lp::Status::optimal || x.value != y.value) {
                bad << " LP optimum differs on " << cfg_str(c) << ";";
            }
        }
    });
    const std::string summary = std::to_string(configs) + " configs, " + std::to_string(points) +
                                " integer points, " + std::to_string(objectives) + " objectives";
    if (!bad.str().empty()) return {false, summary + ";" + bad.str()};
    return {true, summary + ", no change"};
}

// Criteria 3 and 8 share one scan.
struct ScanTotals {
    int configs = 0;
    std::int64_t points = 0;
    std::int64_t verified = 0;
    std::int64_t trials = 0;
    std::int64_t accounted = 0;
    std::int64_t accounting_failures = 0;
    std::int64_t violations = 0;
    std::string first_violation;
};

ScanTotals& theorem3_scan() {
    static ScanTotals totals = [] {
        ScanTotals t;
        oracle::ScanLimits limits;
        limits.seed = 3;
        limits.outside_probes = 0;  // criterion 4 probes separately
        for_configs(6, 1, [&](const ChannelConfig& c) {
            const auto rep = oracle::achievability_scan(c, limits);
            ++t.configs;
            t.points += rep.planned;
            t.verified += rep.verified;
            t.trials += rep.trials;
            t.accounted += rep.accounting_checked;
            t.accounting_failures += rep.accounting_failures;
            t.violations += rep.violation_count;
            if (t.first_violation.empty() && !rep.violations.empty()) t.first_violation = rep.violations.front();
            if (rep.planned != rep.integer_points) {
                ++t.violations;
                if (t.first_violation.empty()) t.first_violation = "not every integer point planned on " + cfg_str(c);
            }
        });
        return t;
    }();
    return totals;
}

Outcome integer_achievability() {
    const auto& t = theorem3_scan();
    std::string d = std::to_string(t.configs) + " configs, " + std::to_string(t.points) + " integer points planned, " +
                    std::to_string(t.verified) + " verified over " + std::to_string(t.trials) + " message sets";
    if (t.violations > 0) return {false, d + "; " + std::to_string(t.violations) + " violations, e.g. " + t.first_violation};
    return {true, d + ", zero decode failures"};
}

Outcome planner_soundness() {
    std::int64_t probes = 0;
    std::int64_t rejected = 0;
    std::string first;
    int configs = 0;
    for_configs(6, 1, [&](const ChannelConfig& c) {
        ++configs;
        const auto rep = oracle::soundness_probes(c, 1000, 4);
        probes += rep.probes;
        rejected += rep.rejected;
        if (first.empty() && !rep.violations.empty()) first = rep.violations.front();
    });
    std::string d = std::to_string(configs) + " configs, " + std::to_string(rejected) + "/" + std::to_string(probes) +
                    " out-of-bound probes rejected with NOT_IN_REGION";
    if (rejected != probes) return {false, d + "; e.g. " + first};
    return {true, d};
}

Outcome corner_points() {
    int configs = 0;
    int vertex_count = 0;
    int fractional = 0;
    int extended = 0;
    std::ostringstream bad;
    for_configs(4, 1, [&](const ChannelConfig& c) {
        ++configs;
        const Region r = outer_bound(c);
        const auto vs = vertices(r);
        std::vector<RateTuple> pts;
        for (const auto& v : vs) pts.push_back(v.point);
        const auto check = oracle::vertex_validate(r, pts);
        if (!check.passed()) bad << " vertex check failed on " << cfg_str(c) << ";";
        vertex_count += static_cast<int>(vs.size());
        for (const auto& v : vs) {
            if (v.point.is_integral()) continue;
            ++fractional;
            try {
                const auto ext = symbol_extension(v.point, c);
                VerifyMode mode;
                mode.kind = VerifyMode::Kind::random;
                mode.seed = 5;
                mode.trials = 256;
                if (!verify_plan(build_plan(ext.rates, ext.config), mode).passed()) {
                    bad << " simulation failed for " << v.point.str() << " on " << cfg_str(c) << ";";
                } else {
                    ++extended;
                }
            } catch (const Error& e) {
                bad << " " << v.point.str() << " on " << cfg_str(c) << ": " << e.what() << ";";
            }
        }
    });
    std::string d = std::to_string(configs) + " configs, " + std::to_string(vertex_count) +
                    " vertices validated, " + std::to_string(extended) + "/" + std::to_string(fractional) +
                    " fractional vertices extended and simulated";

    // The specific (2,2,2) requirement.
    const std::array<Rational, 6> third = {Rational(2, 3), Rational(2, 3), Rational(2, 3),
                                           Rational(2, 3), Rational(2, 3), Rational(2, 3)};
    const RateTuple sym(third);
    const auto vs = vertices(outer_bound({2, 2, 2}));
    const bool found = std::any_of(vs.begin(), vs.end(), [&](const Vertex& v) { return v.point == sym; });
    const auto ext = symbol_extension(sym, {2, 2, 2});
    const auto rank = oracle::vertex_validate(outer_bound({2, 2, 2}), {sym}).points.front().tight_rank;
    d += "; (2,2,2) vertex (2/3,...,2/3): " + std::string(found ? "present" : "ABSENT") + " (" +
         std::to_string(vs.size()) + " vertices, all integral; the point is a member with tight rank " +
         std::to_string(rank) + "), Q = " + std::to_string(ext.factor);
    if (!found) bad << " (2,2,2) does not produce the vertex (2/3,...,2/3);";
    if (ext.factor != 3) bad << " Q != 3 for (2/3,...,2/3);";
    if (!bad.str().empty()) return {false, d + ";" + bad.str()};
    return {true, d};
}

Outcome hull_consistency() {
    int configs = 0;
    int samples = 0;
    int members = 0;
    int disagreements = 0;
    for_configs(6, 0, [&](const ChannelConfig& c) {
        ++configs;
        const Region r = outer_bound(c);
        std::vector<RateTuple> pts;
        for (const auto& v : vertices(r)) pts.push_back(v.point);
        const auto rep = oracle::vertex_validate(r, pts, 1000, 6);
        samples += rep.hull_samples;
        members += rep.hull_members;
        disagreements += rep.hull_disagreements;
    });
    std::string d = std::to_string(configs) + " configs, " + std::to_string(samples) + " rational samples (" +
                    std::to_string(members) + " members), " + std::to_string(disagreements) + " disagreements";
    return {disagreements == 0 && samples == 1000 * configs, d};
}

Outcome asymmetry() {
    const Region r = outer_bound({4, 3, 2});
    const bool a = is_member(RateTuple::from_integers({3, 0, 0, 0, 0, 0}), r);
    const bool b = is_member(RateTuple::from_integers({0, 3, 0, 0, 0, 0}), r);
    return {a && !b, std::string("(3,0,0,0,0,0) ") + (a ? "member" : "non-member") + ", (0,3,0,0,0,0) " +
                         (b ? "member" : "non-member")};
}

Outcome rate_per_level() {
    const auto& t = theorem3_scan();
    std::string d = std::to_string(t.accounted) + " assignments checked, " + std::to_string(t.accounting_failures) +
                    " mismatches";
    return {t.accounting_failures == 0 && t.accounted > 0, d};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "outer-bound fidelity on (4,3,2)", 1, outer_bound_golden},
        {2, "cut-set and single-rate bounds are redundant, n1 <= 8", 60, redundancy_theorem},
        {3, "every integer point plans and decodes, n1 <= 6", 600, integer_achievability},
        {4, "planner soundness, 1000 probes per config", 60, planner_soundness},
        {5, "corner points and symbol extension, n1 <= 4", 300, corner_points},
        {6, "hull consistency, n1 <= 6", 300, hull_consistency},
        {7, "asymmetry witness on (4,3,2)", 1, asymmetry},
        {8, "rate-per-level accounting over the criterion 3 scan", 600, rate_per_level},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_seconds;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << secs << "s / " << c.budget_seconds << "s";
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " [" << time.str()
                  << (in_time ? "" : ", over budget") << "] " << o.detail << "\n"
                  << std::flush;
    }
    std::cout << failed << " of " << criteria.size() << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}
