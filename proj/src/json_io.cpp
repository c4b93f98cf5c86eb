#include "dyc/json_io.hpp"

namespace dyc::json {

namespace {

json bits_json(const std::vector<std::uint8_t>& bits) {
    json a = json::array();
    for (auto b : bits) a.push_back(static_cast<int>(b));
    return a;
}

json message_json(const MessageSet& m) {
    json j = json::object();
    for (Stream s : kStreams) j["R" + stream_name(s)] = bits_json(m[s]);
    return j;
}

Stream stream_from_name(const std::string& name) {
    for (Stream s : kStreams) {
        if (stream_name(s) == name) return s;
    }
    throw Error(ErrorCode::invalid_argument, "unknown stream '" + name + "'");
}

StrategyKind kind_from_name(const std::string& name) {
    for (auto k : {StrategyKind::bidirectional, StrategyKind::cyclic, StrategyKind::unidirectional}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorCode::invalid_argument, "unknown assignment kind '" + name + "'");
}

json triple(const std::array<int, 3>& n) { return json::array({n[0], n[1], n[2]}); }

}  // namespace

json to_json(const ChannelConfig& config) {
    return {{"n1", config.n1()}, {"n2", config.n2()}, {"n3", config.n3()}};
}

json to_json(const RateTuple& rates) {
    json j = json::object();
    for (Stream s : kStreams) j["R" + stream_name(s)] = rates[s].str();
    return j;
}

json to_json(const IntRates& rates) { return to_json(RateTuple::from_integers(rates)); }

json to_json(const Inequality& ineq) {
    json coeffs = json::object();
    for (Stream s : kStreams) coeffs["R" + stream_name(s)] = ineq.coefficients[static_cast<std::size_t>(index_of(s))];
    return {{"label", ineq.label.str()}, {"coefficients", coeffs}, {"bound", ineq.bound}, {"text", ineq.str()}};
}

json to_json(const Region& region) {
    json ineqs = json::array();
    json nonneg = json::array();
    for (const auto& ineq : region.inequalities) {
        (ineq.label.kind == Label::Kind::nonneg ? nonneg : ineqs).push_back(to_json(ineq));
    }
    return {{"config", to_json(region.config)}, {"inequalities", ineqs}, {"nonnegativity", nonneg}};
}

json to_json(const Vertex& vertex) {
    json tight = json::array();
    for (const auto& l : vertex.tight) tight.push_back(l.str());
    return {{"point", to_json(vertex.point)}, {"tight", tight}};
}

json to_json(const RedundancyReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"label", e.inequality.label.str()},
                           {"text", e.inequality.str()},
                           {"max_over_outer_bound", e.max_over_outer_bound.str()},
                           {"verdict", e.verdict == Verdict::redundant ? "REDUNDANT" : "ESSENTIAL"}});
    }
    return {{"config", to_json(report.config)}, {"entries", entries}};
}

json to_json(const StreamAssignment& sa) {
    json streams = json::array();
    for (Stream s : sa.streams) streams.push_back(stream_name(s));
    json groups = json::array();
    for (const auto& g : sa.groups) {
        json terms = json::array();
        for (Stream s : g.terms) terms.push_back(stream_name(s));
        groups.push_back({{"terms", terms}, {"uplink_levels", g.uplink_levels}, {"downlink_levels", g.downlink_levels}});
    }
    json j = {{"kind", std::string(to_string(sa.kind))}, {"streams", streams}, {"width", sa.width}, {"groups", groups}};
    j["cycle"] = sa.cycle ? json(std::string(to_string(*sa.cycle))) : json(nullptr);
    return j;
}

json to_json(const LevelPlan& plan) {
    json assignments = json::array();
    for (const auto& sa : plan.assignments) assignments.push_back(to_json(sa));
    json relay = json::array();
    for (const auto& [u, d] : plan.relay_map) relay.push_back(json::array({u, d}));
    const auto& t = plan.trace;
    json stages = {{"a", t.a},
                   {"b", t.b},
                   {"c", t.c},
                   {"d", t.d},
                   {"e", t.e},
                   {"reduced_after_bidirectional", triple(t.after_bidirectional)},
                   {"reduced_after_cyclic", triple(t.after_cyclic)},
                   {"residual_after_bidirectional", to_json(t.residual_after_bidirectional)},
                   {"residual_after_cyclic", to_json(t.residual_after_cyclic)}};
    return {{"config", to_json(plan.config)},
            {"rates", to_json(plan.rates)},
            {"stages", stages},
            {"assignments", assignments},
            {"relay_map", relay}};
}

json to_json(const SimulationReport& report) {
    json examples = json::array();
    for (const auto& f : report.failure_examples) {
        examples.push_back({{"sent", message_json(f.sent)},
                            {"stream", stream_name(f.stream)},
                            {"expected", bits_json(f.expected)},
                            {"decoded", bits_json(f.decoded)}});
    }
    json mode = report.exhaustive ? json{{"kind", "exhaustive"}}
                                  : json{{"kind", "random"}, {"seed", report.seed}, {"count", report.trials}};
    return {{"verdict", report.passed() ? "PASS" : "FAIL"},
            {"mode", mode},
            {"trials", report.trials},
            {"failures", report.failures},
            {"failure_examples", examples}};
}

json to_json(const oracle::ScanReport& report) {
    return {{"config", to_json(report.config)},
            {"verdict", report.passed() ? "PASS" : "FAIL"},
            {"integer_points", report.integer_points},
            {"planned", report.planned},
            {"verified", report.verified},
            {"trials", report.trials},
            {"outside_probes", report.probes},
            {"outside_rejected", report.probes_rejected},
            {"assignments_accounted", report.accounting_checked},
            {"accounting_failures", report.accounting_failures},
            {"violation_count", report.violation_count},
            {"violations", report.violations}};
}

ChannelConfig config_from_json(const json& j) {
    return {j.at("n1").get<int>(), j.at("n2").get<int>(), j.at("n3").get<int>()};
}

RateTuple rates_from_json(const json& j) {
    std::array<Rational, 6> r;
    for (Stream s : kStreams) r[static_cast<std::size_t>(index_of(s))] = Rational::parse(j.at("R" + stream_name(s)).get<std::string>());
    return RateTuple(r);
}

LevelPlan plan_from_json(const json& j) {
    LevelPlan plan{config_from_json(j.at("config")), rates_from_json(j.at("rates")).integers(), {}, {}, {}};
    for (const auto& ja : j.at("assignments")) {
        StreamAssignment sa;
        sa.kind = kind_from_name(ja.at("kind").get<std::string>());
        sa.width = ja.at("width").get<int>();
        for (const auto& s : ja.at("streams")) sa.streams.push_back(stream_from_name(s.get<std::string>()));
        if (ja.contains("cycle") && !ja.at("cycle").is_null()) {
            const auto c = ja.at("cycle").get<std::string>();
            sa.cycle = c == to_string(CycleDirection::forward) ? CycleDirection::forward : CycleDirection::backward;
        }
        for (const auto& jg : ja.at("groups")) {
            LevelGroup g;
            for (const auto& s : jg.at("terms")) g.terms.push_back(stream_from_name(s.get<std::string>()));
            g.uplink_levels = jg.at("uplink_levels").get<std::vector<int>>();
            g.downlink_levels = jg.at("downlink_levels").get<std::vector<int>>();
            sa.groups.push_back(std::move(g));
        }
        plan.assignments.push_back(std::move(sa));
    }
    for (const auto& pair : j.at("relay_map")) plan.relay_map.emplace(pair.at(0).get<int>(), pair.at(1).get<int>());
    if (j.contains("stages")) {
        const auto& st = j.at("stages");
        plan.trace.a = st.value("a", 0);
        plan.trace.b = st.value("b", 0);
        plan.trace.c = st.value("c", 0);
        plan.trace.d = st.value("d", 0);
        plan.trace.e = st.value("e", 0);
        if (st.contains("reduced_after_bidirectional")) {
            plan.trace.after_bidirectional = st.at("reduced_after_bidirectional").get<std::array<int, 3>>();
        }
        if (st.contains("reduced_after_cyclic")) {
            plan.trace.after_cyclic = st.at("reduced_after_cyclic").get<std::array<int, 3>>();
        }
        if (st.contains("residual_after_bidirectional")) {
            plan.trace.residual_after_bidirectional = rates_from_json(st.at("residual_after_bidirectional")).integers();
        }
        if (st.contains("residual_after_cyclic")) {
            plan.trace.residual_after_cyclic = rates_from_json(st.at("residual_after_cyclic")).integers();
        }
    }
    return plan;
}

}  // namespace dyc::json
