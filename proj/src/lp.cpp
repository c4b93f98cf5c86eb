#include "dyc/lp.hpp"

#include <stdexcept>

namespace dyc::lp {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& objective_row) {
        const Rational inv = Rational(1) / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) {
            if (at(pr, c).sign() != 0) at(pr, c) *= inv;
        }
        auto eliminate = [&](auto&& row_at) {
            const Rational factor = row_at(pc);
            if (factor.sign() == 0) return;
            for (std::size_t c = 0; c <= cols_; ++c) {
                const Rational& p = at(pr, c);
                if (p.sign() != 0) row_at(c) -= factor * p;
            }
        };
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != pr) eliminate([&](std::size_t c) -> Rational& { return at(r, c); });
        }
        eliminate([&](std::size_t c) -> Rational& { return objective_row[c]; });
        basis_[pr] = pc;
    }

    // objective_row[c] holds the reduced cost of column c (negative = improving);
    // objective_row[cols] holds the current objective value.
    Status optimize(std::vector<Rational>& objective_row, const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (allowed[c] && objective_row[c].sign() < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == cols_) return Status::optimal;

            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (at(r, enter).sign() <= 0) continue;
                Rational ratio = rhs(r) / at(r, enter);
                if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows_) return Status::unbounded;
            pivot(leave, enter, objective_row);
        }
    }

    std::vector<Rational> objective_row_for(const std::vector<Rational>& cost) {
        std::vector<Rational> row(cols_ + 1);
        for (std::size_t c = 0; c < cols_; ++c) row[c] = -cost[c];
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb.sign() == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) {
                if (at(r, c).sign() != 0) row[c] += cb * at(r, c);
            }
        }
        return row;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
};

struct Solved {
    Status status;
    Rational value;
    std::vector<Rational> x;  // structural columns
};

Solved solve(std::span<const Rational> objective, std::span<const Constraint> constraints, std::size_t num_vars,
             Domain domain, bool phase_one_only) {
    const std::size_t split = domain == Domain::free ? 2 : 1;
    const std::size_t structural = num_vars * split;
    const std::size_t m = constraints.size();

    // Normalize to non-negative right-hand sides.
    struct Row {
        std::vector<Rational> a;
        Relation rel;
        Rational b;
    };
    std::vector<Row> rows;
    rows.reserve(m);
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& con : constraints) {
        if (con.coeffs.size() != num_vars) throw std::invalid_argument("constraint width mismatch");
        Row row{std::vector<Rational>(structural), con.relation, con.rhs};
        for (std::size_t v = 0; v < num_vars; ++v) {
            row.a[v * split] = con.coeffs[v];
            if (split == 2) row.a[v * split + 1] = -con.coeffs[v];
        }
        if (row.b.sign() < 0) {
            for (auto& x : row.a) x = -x;
            row.b = -row.b;
            if (row.rel == Relation::le) {
                row.rel = Relation::ge;
            } else if (row.rel == Relation::ge) {
                row.rel = Relation::le;
            }
        }
        if (row.rel != Relation::eq) ++slack_count;
        if (row.rel != Relation::le) ++artificial_count;
        rows.push_back(std::move(row));
    }

    const std::size_t slack_begin = structural;
    const std::size_t art_begin = slack_begin + slack_count;
    const std::size_t cols = art_begin + artificial_count;
    Tableau t(m, cols);
    std::size_t next_slack = slack_begin;
    std::size_t next_art = art_begin;
    for (std::size_t r = 0; r < m; ++r) {
        const Row& row = rows[r];
        for (std::size_t c = 0; c < structural; ++c) t.at(r, c) = row.a[c];
        t.rhs(r) = row.b;
        if (row.rel == Relation::le) {
            t.at(r, next_slack) = 1;
            t.basis()[r] = next_slack++;
        } else {
            if (row.rel == Relation::ge) t.at(r, next_slack++) = -1;
            t.at(r, next_art) = 1;
            t.basis()[r] = next_art++;
        }
    }

    std::vector<bool> allowed(cols, true);
    if (artificial_count > 0) {
        std::vector<Rational> phase1_cost(cols);
        for (std::size_t c = art_begin; c < cols; ++c) phase1_cost[c] = -1;
        auto obj = t.objective_row_for(phase1_cost);
        t.optimize(obj, allowed);
        if (obj[cols].sign() != 0) return {Status::infeasible, {}, {}};
        // Drive remaining zero-valued artificials out of the basis where possible.
        for (std::size_t r = 0; r < m; ++r) {
            if (t.basis()[r] < art_begin) continue;
            for (std::size_t c = 0; c < art_begin; ++c) {
                if (t.at(r, c).sign() != 0) {
                    t.pivot(r, c, obj);
                    break;
                }
            }
        }
        for (std::size_t c = art_begin; c < cols; ++c) allowed[c] = false;
    }
    if (phase_one_only) return {Status::optimal, {}, {}};

    std::vector<Rational> cost(cols);
    for (std::size_t v = 0; v < num_vars; ++v) {
        cost[v * split] = objective[v];
        if (split == 2) cost[v * split + 1] = -objective[v];
    }
    auto obj = t.objective_row_for(cost);
    if (t.optimize(obj, allowed) == Status::unbounded) return {Status::unbounded, {}, {}};

    std::vector<Rational> col_value(cols);
    for (std::size_t r = 0; r < m; ++r) col_value[t.basis()[r]] = t.rhs(r);
    std::vector<Rational> x(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) {
        x[v] = col_value[v * split];
        if (split == 2) x[v] -= col_value[v * split + 1];
    }
    return {Status::optimal, obj[cols], std::move(x)};
}

}  // namespace

Result maximize(std::span<const Rational> objective, std::span<const Constraint> constraints, Domain domain) {
    Solved s = solve(objective, constraints, objective.size(), domain, false);
    return {s.status, s.value, std::move(s.x)};
}

bool feasible(std::span<const Constraint> constraints, std::size_t num_vars, Domain domain) {
    return solve({}, constraints, num_vars, domain, true).status == Status::optimal;
}

}  // namespace dyc::lp
