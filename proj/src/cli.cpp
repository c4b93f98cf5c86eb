#include "dyc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "dyc/json_io.hpp"

namespace dyc::cli {

namespace {

using nlohmann::json;
namespace io = dyc::json;

constexpr int kExhaustiveScanLimit = 6;
constexpr int kSampledScanLimit = 8;
constexpr int kSampledPointsPerConfig = 200;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_gain(const std::string& text) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("channel gain '" + text + "' is not an integer");
    }
}

ChannelConfig parse_config(const std::vector<std::string>& gains) {
    try {
        return {parse_gain(gains.at(0)), parse_gain(gains.at(1)), parse_gain(gains.at(2))};
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

RateTuple parse_rates(const std::vector<std::string>& text) {
    if (text.size() != 6) throw UsageError("expected six rates R12 R13 R21 R23 R31 R32");
    std::array<Rational, 6> r;
    for (std::size_t i = 0; i < 6; ++i) {
        try {
            r[i] = Rational::parse(text[i]);
        } catch (const std::exception& e) {
            throw UsageError("rate '" + text[i] + "' is not a rational: " + e.what());
        }
        if (r[i].sign() < 0) throw UsageError("rate '" + text[i] + "' is negative");
    }
    return RateTuple(r);
}

struct Output {
    std::string path;

    void emit(const json& payload, std::ostream& out) const {
        const std::string text = payload.dump(2) + "\n";
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw UsageError("cannot open output file '" + path + "'");
        f << text;
    }
};

int cmd_region(const std::vector<std::string>& gains, bool with_vertices, bool with_redundancy, const Output& o,
               std::ostream& out) {
    const ChannelConfig cfg = parse_config(gains);
    const Region region = outer_bound(cfg);
    json doc = {{"schema", io::kRegionSchema}, {"region", io::to_json(region)}};
    if (with_vertices) {
        json vs = json::array();
        for (const auto& v : vertices(region)) vs.push_back(io::to_json(v));
        doc["vertices"] = vs;
    }
    if (with_redundancy) doc["redundancy"] = io::to_json(redundancy_report(cfg));
    o.emit(doc, out);
    return kOk;
}

int cmd_check(const std::vector<std::string>& args, const Output& o, std::ostream& out) {
    if (args.size() != 9) throw UsageError("check expects n1 n2 n3 R12 R13 R21 R23 R31 R32");
    const ChannelConfig cfg = parse_config({args.begin(), args.begin() + 3});
    const RateTuple r = parse_rates({args.begin() + 3, args.end()});
    const auto bad = violated(r, outer_bound(cfg));
    json labels = json::array();
    for (const auto& l : bad) labels.push_back(l.str());
    o.emit({{"schema", io::kCheckSchema},
            {"config", io::to_json(cfg)},
            {"rates", io::to_json(r)},
            {"verdict", bad.empty() ? "member" : "non-member"},
            {"violated", labels}},
           out);
    return bad.empty() ? kOk : kRejected;
}

struct SimulateOptions {
    bool simulate = false;
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
};

int cmd_plan(const std::vector<std::string>& args, const SimulateOptions& sim, const Output& o, std::ostream& out,
             std::ostream& err) {
    if (args.size() != 9) throw UsageError("plan expects n1 n2 n3 R12 R13 R21 R23 R31 R32");
    const ChannelConfig cfg = parse_config({args.begin(), args.begin() + 3});
    const RateTuple r = parse_rates({args.begin() + 3, args.end()});

    json doc = {{"schema", io::kPlanSchema}, {"config", io::to_json(cfg)}, {"requested_rates", io::to_json(r)}};
    try {
        const SymbolExtension ext = symbol_extension(r, cfg);
        doc["extension"] = {{"Q", ext.factor}, {"config", io::to_json(ext.config)}, {"rates", io::to_json(ext.rates)}};
        const LevelPlan plan = build_plan(ext.rates, ext.config);
        doc["plan"] = io::to_json(plan);
        int code = kOk;
        if (sim.simulate) {
            VerifyMode mode;
            if (sim.exhaustive) {
                mode.kind = VerifyMode::Kind::exhaustive;
            } else if (sim.seed || sim.trials) {
                mode.kind = VerifyMode::Kind::random;
            }
            mode.seed = sim.seed.value_or(0);
            mode.trials = sim.trials.value_or(256);
            const SimulationReport report = verify_plan(plan, mode);
            doc["simulation"] = io::to_json(report);
            if (!report.passed()) code = kRejected;
        }
        o.emit(doc, out);
        return code;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::not_in_region) {
            doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
            doc["violated"] = json::array();
            for (const auto& l : violated(r, outer_bound(cfg))) doc["violated"].push_back(l.str());
            o.emit(doc, out);
            err << "error: " << e.what() << "\n";
            return kRejected;
        }
        if (e.code() == ErrorCode::invalid_argument) throw UsageError(e.what());
        throw;
    }
}

int cmd_scan(int max_n1, std::uint64_t seed, bool force, const Output& o, std::ostream& out, std::ostream& err) {
    if (max_n1 < 0) throw UsageError("--max-n1 must be non-negative");
    if (max_n1 > kSampledScanLimit && !force) {
        throw UsageError("--max-n1 " + std::to_string(max_n1) + " exceeds the limit of " +
                         std::to_string(kSampledScanLimit) + "; pass --force to run anyway");
    }
    const bool sampled = max_n1 > kExhaustiveScanLimit;
    oracle::ScanLimits limits;
    limits.seed = seed;
    if (sampled) limits.max_points = kSampledPointsPerConfig;

    json configs = json::array();
    std::int64_t failures = 0;
    std::int64_t points = 0;
    std::int64_t trials = 0;
    for (int n1 = 0; n1 <= max_n1; ++n1) {
        for (int n2 = 0; n2 <= n1; ++n2) {
            for (int n3 = 0; n3 <= n2; ++n3) {
                const auto rep = oracle::achievability_scan({n1, n2, n3}, limits);
                failures += rep.passed() ? 0 : 1;
                points += rep.planned;
                trials += rep.trials;
                if (!rep.passed()) {
                    err << "scan: violations on (" << n1 << ", " << n2 << ", " << n3 << ")\n";
                }
                configs.push_back(io::to_json(rep));
            }
        }
    }
    o.emit({{"schema", io::kScanSchema},
            {"max_n1", max_n1},
            {"seed", seed},
            {"mode", sampled ? "sampled" : "exhaustive"},
            {"verdict", failures == 0 ? "PASS" : "FAIL"},
            {"configs_failed", failures},
            {"points_planned", points},
            {"trials", trials},
            {"configs", configs}},
           out);
    return failures == 0 ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity region and relay level plans for the linear deterministic Y-channel", "dyc"};
    app.require_subcommand(1);
    Output output;

    std::vector<std::string> gains;
    bool with_vertices = false;
    bool with_redundancy = false;
    auto* region = app.add_subcommand("region", "Outer-bound inequalities, optionally vertices and redundancy");
    region->add_option("gains", gains, "n1 n2 n3")->expected(3)->required();
    region->add_flag("--vertices", with_vertices, "List the vertices as exact rationals");
    region->add_flag("--redundancy", with_redundancy, "Decide redundancy of cut-set and single-rate bounds");
    region->add_option("--output", output.path, "Write the JSON document to FILE");

    std::vector<std::string> check_args;
    auto* check = app.add_subcommand("check", "Membership of a rate tuple in the outer bound");
    check->add_option("args", check_args, "n1 n2 n3 R12 R13 R21 R23 R31 R32")->expected(9)->required();
    check->add_option("--output", output.path, "Write the JSON document to FILE");

    std::vector<std::string> plan_args;
    SimulateOptions sim;
    std::uint64_t plan_seed = 0;
    int plan_trials = 0;
    auto* plan = app.add_subcommand("plan", "Relay level plan for a rate tuple");
    plan->add_option("args", plan_args, "n1 n2 n3 R12 R13 R21 R23 R31 R32")->expected(9)->required();
    plan->add_flag("--simulate", sim.simulate, "Verify the plan end to end");
    auto* exhaustive_flag = plan->add_flag("--exhaustive", sim.exhaustive, "Try every message set");
    auto* seed_opt = plan->add_option("--seed", plan_seed, "Seed for random message sets");
    auto* trials_opt = plan->add_option("--trials", plan_trials, "Number of random message sets")
                           ->check(CLI::PositiveNumber);
    exhaustive_flag->excludes(seed_opt)->excludes(trials_opt);
    plan->add_option("--output", output.path, "Write the JSON document to FILE");

    int max_n1 = 0;
    std::uint64_t scan_seed = 1;
    bool force = false;
    auto* scan = app.add_subcommand("scan", "Plan and verify every integer point for all channels up to n1");
    scan->add_option("--max-n1", max_n1, "Largest n1 to scan")->required();
    scan->add_option("--seed", scan_seed, "Seed for sampled points, probes and random trials");
    scan->add_flag("--force", force, "Allow --max-n1 beyond the safety limit");
    scan->add_option("--output", output.path, "Write the JSON document to FILE");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (region->parsed()) return cmd_region(gains, with_vertices, with_redundancy, output, out);
        if (check->parsed()) return cmd_check(check_args, output, out);
        if (plan->parsed()) {
            if (seed_opt->count() > 0) sim.seed = plan_seed;
            if (trials_opt->count() > 0) sim.trials = plan_trials;
            return cmd_plan(plan_args, sim, output, out, err);
        }
        if (scan->parsed()) return cmd_scan(max_n1, scan_seed, force, output, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kUsage;
}

}  // namespace dyc::cli
