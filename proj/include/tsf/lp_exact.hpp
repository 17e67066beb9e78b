#pragma once

#include "tsf/polyhedron.hpp"

namespace tsf {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat objective = 0;
  std::vector<Rat> x;       // primal point, indexed like P.vars
  std::vector<Rat> y;       // row multipliers: A'y = c, y<=0 on LE rows, b'y = objective
  std::vector<Rat> farkas;  // on Infeasible: lam>=0 on LE rows, lam'A = 0, lam'b < 0
};

// Exact two-phase primal simplex with Bland's rule over free variables and
// normalized LE/EQ rows. Minimizes by default.
LPResult lp_solve_rows(const Polyhedron& P, const LinearForm& objective,
                       bool maximize = false);

// max a'x - rhs over P; <= 0 means the row is implied by P.
// Returns {max_violation, argmax} (throws Unbounded if the face is unbounded
// above and P admits arbitrarily large violation).
struct RowCheck {
  bool implied = false;
  Rat excess = 0;             // max(a'x) - rhs, 0 if implied and tight-capped
  std::vector<Rat> point;     // maximizer (meaningful when !implied)
  std::vector<Rat> multipliers; // lam >= 0 with lam'A = a, lam'b <= rhs when implied
};
RowCheck check_row_implied(const Polyhedron& P, const LinearConstraint& row);

} // namespace tsf
