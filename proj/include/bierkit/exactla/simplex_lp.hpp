#pragma once

// Exact rational linear programming: dense two-phase simplex with Bland's
// anti-cycling rule.

#include "bierkit/exactla/matrix.hpp"

#include <cstddef>
#include <vector>

namespace bierkit::exactla {

/// maximize  c.x  subject to  A_le x <= b_le,  A_eq x = b_eq,  x >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Vec> le_rows;
    Vec le_rhs;
    std::vector<Vec> eq_rows;
    Vec eq_rhs;
    Vec objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vec x;
    Rational value;
    // Optimal dual: y >= 0 on the <= rows, free z on the = rows, with
    // A_le^T y + A_eq^T z >= c and b_le.y + b_eq.z == value.
    Vec dual_le;
    Vec dual_eq;
    std::size_t pivots = 0;
};

LpSolution solve_lp(const LinearProgram& lp);

// Re-checks primal feasibility, dual feasibility and equal objectives.
bool certifies_optimality(const LinearProgram& lp, const LpSolution& sol);

// Feasibility of the constraint system alone (objective ignored).
bool is_feasible(const LinearProgram& lp);

}  // namespace bierkit::exactla
