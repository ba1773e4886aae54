#pragma once

#include <cstddef>
#include <vector>

#include "vpf/exactmath.hpp"

namespace vpf {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
    RatVector coefficients;
    Relation relation;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVector x;         // a feasible (optimal when Optimal) point; empty when Infeasible
    Rational objective;  // objective value at x
    bool feasible() const { return status != LpStatus::Infeasible; }
};

/// Exact dense two-phase simplex with Bland's rule.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), nonnegative_(num_vars, true) {}

    std::size_t num_vars() const { return num_vars_; }

    /// Variables are nonnegative by default.
    void set_free(std::size_t var) { nonnegative_.at(var) = false; }
    void set_all_free() { nonnegative_.assign(num_vars_, false); }

    void add_constraint(RatVector coefficients, Relation relation, Rational rhs);
    void add_constraint(const IntVector& coefficients, Relation relation, const Integer& rhs);

    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    LpResult feasible() const;
    LpResult maximize(const RatVector& objective) const;

    /// Exact re-substitution check of every constraint and sign condition.
    bool satisfied_by(const RatVector& x) const;

private:
    LpResult run(const RatVector* objective) const;

    std::size_t num_vars_;
    std::vector<bool> nonnegative_;
    std::vector<LinearConstraint> constraints_;
};

/// Feasibility of {x >= 0 : A x = b}, with a witness.
LpResult lp_feasible(const RatMatrix& A, const RatVector& b);

}  // namespace vpf
