#pragma once

#include <vector>

#include "reflex/arith.hpp"
#include "reflex/linalg.hpp"

namespace reflex {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value = 0;
    std::vector<Rat> x;
    bool feasible() const { return status != LpStatus::Infeasible; }
};

enum class Rel { Le, Ge, Eq };

// One linear constraint  sum coeff[i] x[i]  (rel)  rhs.
struct LpRow {
    std::vector<Rat> coeff;
    Rel rel = Rel::Le;
    Rat rhs = 0;
};

// Exact two-phase primal simplex, dense rational tableau. Deterministic:
// Dantzig pricing with a Bland fallback after a fixed run of degenerate
// pivots, lowest-index tie-breaking in the ratio test.
//
// Maximizes c.x subject to the rows, x >= 0.
LpResult lp_solve(const std::vector<LpRow>& rows, const std::vector<Rat>& objective);

// Same, with free (sign-unrestricted) variables, handled by splitting.
LpResult lp_solve_free(const std::vector<LpRow>& rows, const std::vector<Rat>& objective);

// Feasibility of the system with free variables (objective 0).
bool lp_feasible_free(const std::vector<LpRow>& rows, std::vector<Rat>* witness = nullptr);

}  // namespace reflex
