#include "dyc/region.hpp"

#include <algorithm>
#include <map>

#include "dyc/lp.hpp"

namespace dyc {

Stream stream_of(User from, User to) {
    static constexpr std::array<std::array<int, 3>, 3> table = {{{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}}};
    int idx = table[static_cast<std::size_t>(index_of(from))][static_cast<std::size_t>(index_of(to))];
    if (idx < 0) throw Error(ErrorCode::invalid_argument, "a stream needs two distinct users");
    return static_cast<Stream>(idx);
}

User sender(Stream s) {
    static constexpr std::array<User, 6> from = {User::u1, User::u1, User::u2, User::u2, User::u3, User::u3};
    return from[static_cast<std::size_t>(index_of(s))];
}

User receiver(Stream s) {
    static constexpr std::array<User, 6> to = {User::u2, User::u3, User::u1, User::u3, User::u1, User::u2};
    return to[static_cast<std::size_t>(index_of(s))];
}

Stream reverse(Stream s) { return stream_of(receiver(s), sender(s)); }

std::string stream_name(Stream s) {
    return std::to_string(static_cast<int>(sender(s))) + std::to_string(static_cast<int>(receiver(s)));
}

// ---------------------------------------------------------------------------
// RateTuple

RateTuple::RateTuple(const std::array<Rational, 6>& rates) : rates_(rates) {
    for (const auto& r : rates_) {
        if (r.sign() < 0) throw Error(ErrorCode::invalid_argument, "rates must be non-negative");
    }
}

RateTuple RateTuple::from_integers(const std::array<std::int64_t, 6>& rates) {
    std::array<Rational, 6> r;
    for (std::size_t i = 0; i < 6; ++i) r[i] = Rational(rates[i]);
    return RateTuple(r);
}

bool RateTuple::is_integral() const {
    return std::all_of(rates_.begin(), rates_.end(), [](const Rational& r) { return r.is_integer(); });
}

std::array<std::int64_t, 6> RateTuple::integers() const {
    if (!is_integral()) throw Error(ErrorCode::precondition_violated, "rate tuple is not integral: " + str());
    std::array<std::int64_t, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = rates_[i].num();
    return out;
}

RateTuple RateTuple::scaled(std::int64_t factor) const {
    std::array<Rational, 6> r;
    for (std::size_t i = 0; i < 6; ++i) r[i] = rates_[i] * Rational(factor);
    return RateTuple(r);
}

std::string RateTuple::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) s += ", ";
        s += rates_[i].str();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Labels and inequalities

namespace {

constexpr std::array<const char*, 12> kFixedLabelNames = {"TRB1", "TRB2", "TRB3", "TRB4", "TRB5", "TRB6",
                                                          "CS3a", "CS3b", "CS1a", "CS1b", "CS2a", "CS2b"};

std::string pair_suffix(Stream s) {
    return "(" + std::to_string(static_cast<int>(sender(s))) + "," + std::to_string(static_cast<int>(receiver(s))) +
           ")";
}

}  // namespace

std::string Label::str() const {
    switch (kind) {
        case Kind::single: return "SINGLE" + pair_suffix(stream);
        case Kind::nonneg: return "NONNEG" + pair_suffix(stream);
        default: return kFixedLabelNames[static_cast<std::size_t>(kind)];
    }
}

std::optional<Label> Label::parse(const std::string& text) {
    for (std::size_t i = 0; i < kFixedLabelNames.size(); ++i) {
        if (text == kFixedLabelNames[i]) return Label{static_cast<Kind>(i)};
    }
    for (Stream s : kStreams) {
        if (text == "SINGLE" + pair_suffix(s)) return Label{Kind::single, s};
        if (text == "NONNEG" + pair_suffix(s)) return Label{Kind::nonneg, s};
    }
    return std::nullopt;
}

Rational Inequality::lhs(const std::array<Rational, 6>& r) const {
    Rational sum;
    for (std::size_t i = 0; i < 6; ++i) {
        if (coefficients[i] != 0) sum += Rational(coefficients[i]) * r[i];
    }
    return sum;
}

Rational Inequality::lhs(const RateTuple& r) const { return lhs(r.values()); }

std::string Inequality::str() const {
    std::string s;
    for (Stream st : kStreams) {
        int c = coefficients[static_cast<std::size_t>(index_of(st))];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        int mag = c < 0 ? -c : c;
        if (mag != 1) s += std::to_string(mag) + "*";
        s += "R" + stream_name(st);
    }
    if (s.empty()) s = "0";
    return s + " <= " + std::to_string(bound);
}

std::vector<Inequality> Region::substantive() const {
    std::vector<Inequality> out;
    for (const auto& ineq : inequalities) {
        if (ineq.label.kind != Label::Kind::nonneg) out.push_back(ineq);
    }
    return out;
}

namespace {

Inequality sum_of(std::initializer_list<Stream> streams, std::int64_t bound, Label label) {
    Inequality ineq;
    for (Stream s : streams) ineq.coefficients[static_cast<std::size_t>(index_of(s))] = 1;
    ineq.bound = bound;
    ineq.label = label;
    return ineq;
}

void append_nonnegativity(std::vector<Inequality>& out) {
    for (Stream s : kStreams) {
        Inequality ineq;
        ineq.coefficients[static_cast<std::size_t>(index_of(s))] = -1;
        ineq.bound = 0;
        ineq.label = Label{Label::Kind::nonneg, s};
        out.push_back(ineq);
    }
}

// Triple-rate bound R_kj + R_lj + R_kl <= min(max(n_j, n_l), max(n_k, n_l)):
// traffic into j from both others plus the k->l stream.
Inequality triple_bound(const ChannelConfig& cfg, Label::Kind kind, User j, User k, User l) {
    const std::int64_t bound = std::min(std::max(cfg.gain(j), cfg.gain(l)), std::max(cfg.gain(k), cfg.gain(l)));
    return sum_of({stream_of(k, j), stream_of(l, j), stream_of(k, l)}, bound, Label{kind});
}

// Cut around user j: R_jk + R_jl (outgoing) or R_kj + R_lj (incoming) <= min(n_j, max(n_k, n_l)).
Inequality cut_bound(const ChannelConfig& cfg, Label::Kind kind, User j, bool outgoing) {
    User k = j == User::u1 ? User::u2 : User::u1;
    User l = j == User::u3 ? User::u2 : User::u3;
    const std::int64_t bound = std::min(cfg.gain(j), std::max(cfg.gain(k), cfg.gain(l)));
    if (outgoing) return sum_of({stream_of(j, k), stream_of(j, l)}, bound, Label{kind});
    return sum_of({stream_of(k, j), stream_of(l, j)}, bound, Label{kind});
}

}  // namespace

Region outer_bound(const ChannelConfig& config) {
    using K = Label::Kind;
    using enum User;
    Region region{config, {}};
    auto& v = region.inequalities;
    v.push_back(triple_bound(config, K::trb1, u2, u1, u3));  // R12 + R32 + R13
    v.push_back(triple_bound(config, K::trb2, u2, u3, u1));  // R12 + R32 + R31
    v.push_back(triple_bound(config, K::trb3, u1, u3, u2));  // R21 + R31 + R32
    v.push_back(triple_bound(config, K::trb4, u1, u2, u3));  // R21 + R31 + R23
    v.push_back(triple_bound(config, K::trb5, u3, u1, u2));  // R13 + R23 + R12
    v.push_back(triple_bound(config, K::trb6, u3, u2, u1));  // R13 + R23 + R21
    v.push_back(cut_bound(config, K::cs3a, u3, true));       // R31 + R32
    v.push_back(cut_bound(config, K::cs3b, u3, false));      // R13 + R23
    append_nonnegativity(v);
    return region;
}

Region cutset_bounds(const ChannelConfig& config) {
    using K = Label::Kind;
    using enum User;
    Region region{config, {}};
    auto& v = region.inequalities;
    v.push_back(cut_bound(config, K::cs1a, u1, true));   // R12 + R13
    v.push_back(cut_bound(config, K::cs1b, u1, false));  // R21 + R31
    v.push_back(cut_bound(config, K::cs2a, u2, true));   // R21 + R23
    v.push_back(cut_bound(config, K::cs2b, u2, false));  // R12 + R32
    v.push_back(cut_bound(config, K::cs3a, u3, true));   // R31 + R32
    v.push_back(cut_bound(config, K::cs3b, u3, false));  // R13 + R23
    for (Stream s : kStreams) {
        v.push_back(sum_of({s}, std::min(config.gain(sender(s)), config.gain(receiver(s))),
                           Label{K::single, s}));
    }
    append_nonnegativity(v);
    return region;
}

Region intersect(const Region& a, const Region& b) {
    if (!(a.config == b.config)) throw Error(ErrorCode::invalid_argument, "regions over different channels");
    Region out{a.config, a.inequalities};
    for (const auto& ineq : b.inequalities) {
        if (std::find(out.inequalities.begin(), out.inequalities.end(), ineq) == out.inequalities.end()) {
            out.inequalities.push_back(ineq);
        }
    }
    return out;
}

bool is_member(const std::array<Rational, 6>& r, const Region& region) {
    return std::all_of(region.inequalities.begin(), region.inequalities.end(),
                       [&](const Inequality& ineq) { return ineq.lhs(r) <= Rational(ineq.bound); });
}

bool is_member(const RateTuple& r, const Region& region) { return is_member(r.values(), region); }

std::vector<Label> violated(const RateTuple& r, const Region& region) {
    std::vector<Label> out;
    for (const auto& ineq : region.inequalities) {
        if (!ineq.holds(r)) out.push_back(ineq.label);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Vertex enumeration

namespace {

using Matrix6 = std::array<std::array<Rational, 7>, 6>;

// Gauss-Jordan on the augmented 6x7 system; nullopt when singular.
std::optional<std::array<Rational, 6>> solve6(Matrix6 m) {
    for (std::size_t col = 0; col < 6; ++col) {
        std::size_t pivot = col;
        while (pivot < 6 && m[pivot][col].sign() == 0) ++pivot;
        if (pivot == 6) return std::nullopt;
        std::swap(m[pivot], m[col]);
        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t c = col; c < 7; ++c) m[col][c] *= inv;
        for (std::size_t r = 0; r < 6; ++r) {
            if (r == col || m[r][col].sign() == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < 7; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::array<Rational, 6> x;
    for (std::size_t i = 0; i < 6; ++i) x[i] = m[i][6];
    return x;
}

}  // namespace

int coefficient_rank(const std::vector<Inequality>& rows) {
    std::vector<std::array<Rational, 6>> m;
    m.reserve(rows.size());
    for (const auto& ineq : rows) {
        std::array<Rational, 6> row;
        for (std::size_t i = 0; i < 6; ++i) row[i] = ineq.coefficients[i];
        m.push_back(row);
    }
    int rank = 0;
    for (std::size_t col = 0; col < 6 && static_cast<std::size_t>(rank) < m.size(); ++col) {
        auto r0 = static_cast<std::size_t>(rank);
        std::size_t pivot = r0;
        while (pivot < m.size() && m[pivot][col].sign() == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[r0]);
        for (std::size_t r = r0 + 1; r < m.size(); ++r) {
            if (m[r][col].sign() == 0) continue;
            const Rational f = m[r][col] / m[r0][col];
            for (std::size_t c = col; c < 6; ++c) m[r][c] -= f * m[r0][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<Vertex> vertices(const Region& region) {
    const auto& ineqs = region.inequalities;
    const std::size_t m = ineqs.size();
    std::map<std::array<Rational, 6>, bool> found;
    if (m >= 6) {
        std::vector<std::size_t> pick = {0, 1, 2, 3, 4, 5};
        for (;;) {
            Matrix6 sys;
            for (std::size_t r = 0; r < 6; ++r) {
                const auto& ineq = ineqs[pick[r]];
                for (std::size_t c = 0; c < 6; ++c) sys[r][c] = ineq.coefficients[c];
                sys[r][6] = Rational(ineq.bound);
            }
            if (auto x = solve6(sys); x && !found.contains(*x) && is_member(*x, region)) found.emplace(*x, true);

            // Next combination in lexicographic order.
            int i = 5;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - 6 + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (auto k = static_cast<std::size_t>(i) + 1; k < 6; ++k) pick[k] = pick[k - 1] + 1;
        }
    }

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (const auto& [point, unused] : found) {
        Vertex v{RateTuple(point), {}};
        std::vector<Inequality> tight_rows;
        for (const auto& ineq : ineqs) {
            if (ineq.lhs(point) == Rational(ineq.bound)) {
                v.tight.push_back(ineq.label);
                tight_rows.push_back(ineq);
            }
        }
        if (coefficient_rank(tight_rows) != 6) {
            throw Error(ErrorCode::internal_infeasible, "vertex " + v.point.str() + " has tight rank below 6");
        }
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Redundancy

namespace {

std::vector<lp::Constraint> as_constraints(const Region& region) {
    std::vector<lp::Constraint> out;
    out.reserve(region.inequalities.size());
    for (const auto& ineq : region.inequalities) {
        lp::Constraint c;
        c.coeffs.assign(ineq.coefficients.begin(), ineq.coefficients.end());
        c.relation = lp::Relation::le;
        c.rhs = Rational(ineq.bound);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

RedundancyReport redundancy_report(const ChannelConfig& config) {
    const Region outer = outer_bound(config);
    RedundancyReport report{config, {}};
    for (const auto& ineq : cutset_bounds(config).substantive()) {
        // A candidate that is itself part of the outer bound (CS3a/CS3b) is
        // judged against the remaining constraints.
        Region others{config, {}};
        for (const auto& o : outer.inequalities) {
            if (o.coefficients != ineq.coefficients) others.inequalities.push_back(o);
        }
        std::vector<Rational> objective(ineq.coefficients.begin(), ineq.coefficients.end());
        auto res = lp::maximize(objective, as_constraints(others));
        if (res.status != lp::Status::optimal) {
            throw Error(ErrorCode::internal_infeasible, "outer bound LP not optimal");
        }
        Verdict verdict = res.value <= Rational(ineq.bound) ? Verdict::redundant : Verdict::essential;
        report.entries.push_back({ineq, res.value, verdict});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Integer points

void for_each_integer_point(const Region& region,
                            const std::function<void(const std::array<std::int64_t, 6>&)>& visit) {
    const auto constraints = as_constraints(region);
    std::array<std::int64_t, 6> upper{};
    std::array<std::int64_t, 6> lower{};
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<Rational> obj(6);
        obj[i] = 1;
        auto hi = lp::maximize(obj, constraints, lp::Domain::free);
        obj[i] = -1;
        auto lo = lp::maximize(obj, constraints, lp::Domain::free);
        if (hi.status == lp::Status::infeasible) return;
        if (hi.status != lp::Status::optimal || lo.status != lp::Status::optimal) {
            throw Error(ErrorCode::invalid_argument, "integer_points requires a bounded region");
        }
        upper[i] = hi.value.floor();
        lower[i] = -lo.value.floor();  // ceil(min x) == -floor(max -x)
    }

    // Pruning is exact when the lhs of every constraint is non-decreasing in
    // each coordinate above its lower box bound, i.e. all coefficients are
    // non-negative except for single-variable lower bounds.
    bool monotone = true;
    for (const auto& ineq : region.inequalities) {
        int negatives = 0;
        int nonzeros = 0;
        for (int c : ineq.coefficients) {
            negatives += c < 0;
            nonzeros += c != 0;
        }
        if (negatives > 0 && nonzeros > 1) monotone = false;
    }

    const std::size_t m = region.inequalities.size();
    std::vector<std::int64_t> partial(m, 0);
    std::array<std::int64_t, 6> point = lower;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < 6; ++i) partial[k] += region.inequalities[k].coefficients[i] * lower[i];
    }

    auto feasible_now = [&]() {
        for (std::size_t k = 0; k < m; ++k) {
            if (partial[k] > region.inequalities[k].bound) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == 6) {
            if (feasible_now()) visit(point);
            return;
        }
        for (std::int64_t v = lower[depth]; v <= upper[depth]; ++v) {
            point[depth] = v;
            if (v != lower[depth]) {
                for (std::size_t k = 0; k < m; ++k) partial[k] += region.inequalities[k].coefficients[depth];
            }
            if (monotone && !feasible_now()) break;
            descend(depth + 1);
        }
        const std::int64_t moved = point[depth] - lower[depth];
        for (std::size_t k = 0; k < m; ++k) partial[k] -= region.inequalities[k].coefficients[depth] * moved;
        point[depth] = lower[depth];
    };
    descend(0);
}

std::vector<RateTuple> integer_points(const Region& region) {
    std::vector<RateTuple> out;
    for_each_integer_point(region, [&](const std::array<std::int64_t, 6>& p) {
        std::array<Rational, 6> r;
        for (std::size_t i = 0; i < 6; ++i) r[i] = Rational(p[i]);
        out.emplace_back(r);
    });
    return out;
}

}  // namespace dyc
