#pragma once

#include "tsf/hull.hpp"

namespace tsf {

// Verdict for one row produced while eliminating the charging state copy.
struct ReplayNote {
  LinearConstraint row;       // normalized combined row
  std::string source;         // "fm(eq:method2 & eq:method1)" provenance
  bool in_hull = false;       // member of the final irredundant system
  std::string dominator;      // human note, e.g. "dominated by eq:method3"
  std::vector<std::pair<std::string, Rat>> multipliers;  // implication certificate
};

// Step-by-step record of the one-period hull derivation for the basic
// operation model: disjunct pair, disjunctive lift, the rewritten
// five-variable system (labels eq:method1..eq:method6), the four
// Fourier-Motzkin combinations on the charging state copy (eq:red1,
// eq:inchb1, eq:inchb2, eq:red2) with machine-checked verdicts, and the
// final projected system compared against the tight builder.
struct HullReplay {
  StorageParams params;
  DisjunctPair disjuncts;
  Polyhedron lifted;
  Polyhedron rewritten;        // hand-scripted substitution result
  bool rewrite_verified = false;  // poly_equal against the engine projection
  FmStep elimination;          // bounds and combinations on the state copy
  std::vector<ReplayNote> combined;
  Polyhedron final_rows;       // projection onto (e[0], pc[1], pd[1], delta[1])
  bool matches_tight = false;  // poly_equal against build_to at one period
  std::string text;            // rendered transcript
};

// Requires fully valid parameters (capacity caps included); the domination
// verdicts rely on them. Exact throughout.
HullReplay replay_derivation(const StorageParams& p);

} // namespace tsf
