#pragma once

#include <vector>

#include "polyzcl/rational.hpp"

namespace polyzcl {

enum class LpRelation { le, ge, eq };

struct LpConstraint {
  std::vector<Rational> coeffs;
  LpRelation rel = LpRelation::le;
  Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> x;
};

// Two-phase dense simplex over exact rationals, variables implicitly >= 0.
// Dantzig pivoting with a switch to Bland's rule as the anti-cycling guard.
LpSolution lp_maximize(const std::vector<Rational>& objective,
                       const std::vector<LpConstraint>& constraints);

}  // namespace polyzcl
