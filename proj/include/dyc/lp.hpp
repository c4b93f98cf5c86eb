#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.
// Sized for the handful-of-variables problems in this library; no sparse
// data structures and no presolve.

#include <span>
#include <vector>

#include "dyc/rational.hpp"

namespace dyc::lp {

enum class Relation { le, eq, ge };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::le;
    Rational rhs;
};

enum class Status { optimal, infeasible, unbounded };

enum class Domain { nonnegative, free };

struct Result {
    Status status = Status::infeasible;
    Rational value;             // optimum, valid when status == optimal
    std::vector<Rational> point;  // an optimal point, valid when status == optimal
};

/// Maximize objective . x over the constraints. With Domain::free each
/// variable is split into a difference of two non-negative parts.
Result maximize(std::span<const Rational> objective, std::span<const Constraint> constraints,
                Domain domain = Domain::nonnegative);

/// Feasibility only (phase one).
bool feasible(std::span<const Constraint> constraints, std::size_t num_vars, Domain domain = Domain::nonnegative);

}  // namespace dyc::lp
