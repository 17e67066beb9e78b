#pragma once

#include "tsf/polyhedron.hpp"
#include "tsf/redundancy.hpp"

namespace tsf {

// Record of one single-variable elimination, kept for proof replay.
struct FmStep {
  std::string var;
  bool via_equality = false;
  LinearConstraint equality;                 // when via_equality
  std::vector<LinearConstraint> lowers;      // rows bounding var from below
  std::vector<LinearConstraint> uppers;      // rows bounding var from above
  std::vector<LinearConstraint> untouched;   // rows without var
  std::vector<LinearConstraint> combined;    // emitted pair combinations
};

// Eliminate one variable exactly. Equality rows containing the variable are
// used Gaussian-style (first such row in input order); otherwise every
// lower/upper pair is combined and labeled "fm(<lower> & <upper>)".
// A pairwise syntactic domination prune runs on the result.
Polyhedron fm_eliminate(const Polyhedron& P, const std::string& var,
                        FmStep* step = nullptr);

// Repeated fm_eliminate (dropped variables in P.vars order) with exact
// LP redundancy removal after each elimination.
Polyhedron project(const Polyhedron& P, const std::vector<std::string>& keep,
                   std::vector<FmStep>* trace = nullptr,
                   std::vector<RemovedRow>* removed = nullptr);

// Substitute an equality row's variable into every other row; helper shared
// with the disjunctive lift.
LinearForm solve_equality_for(const LinearConstraint& eq, int var);

} // namespace tsf
