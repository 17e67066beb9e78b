#pragma once

#include "tsf/milp.hpp"

#include <memory>

namespace tsf {

// Outcome of exactifying a double-precision basis: the basic solution is
// recomputed with rational LU solves, bound/row feasibility and reduced-cost
// signs are checked exactly, and wrong-sign columns trigger exact simplex
// pivots until true optimality. Results are therefore exact even though the
// search ran in doubles.
struct ExactifiedLp {
  SolveStatus status = SolveStatus::Infeasible;
  Rat objective = 0;
  std::vector<Rat> x;       // model variables only
  long float_iterations = 0;
  long cleanup_pivots = 0;  // exact pivots needed after the double run
};

// One-shot solve of a continuous model: double-precision bounded-variable
// revised simplex (Markowitz LU, product-form updates), then exact
// verification/repair of the final basis. Throws logic_error on binary marks.
ExactifiedLp solve_lp_float(const ModelInstance& m);

// Persistent relaxation for branch and bound: bound changes warm-start the
// dual simplex from the incumbent basis. Exactification is available at any
// node (used for incumbents and for the reported optimum).
class BnbLp {
 public:
  explicit BnbLp(const ModelInstance& relaxed);
  ~BnbLp();
  BnbLp(const BnbLp&) = delete;
  BnbLp& operator=(const BnbLp&) = delete;

  // Tighten/restore one model variable's bounds (NaN keeps a side).
  void set_bounds(int var, double lb, double ub);

  // Re-optimize from the current basis. False means primal infeasible.
  bool reoptimize();

  double objective() const;        // sense-correct (minimize => lower bound)
  double value(int var) const;     // current solution, model variable
  long iterations() const;

  // Exact verification of the current basis (solves in rationals, runs
  // exact cleanup pivots if the double run stopped short).
  ExactifiedLp exactify();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl;
};

} // namespace tsf
