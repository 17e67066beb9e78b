#pragma once

#include "tsf/polyhedron.hpp"

namespace tsf {

// Why a row was dropped, with an exact certificate.
//  kind == "duplicate": identical to keeper after normalization.
//  kind == "dominated": same coefficient vector, slacker rhs than keeper.
//  kind == "farkas":    implied by the kept rows; multipliers lambda >= 0
//                       over kept row labels reproduce the row:
//                       sum lambda_i a_i = a and sum lambda_i b_i <= b.
struct RemovedRow {
  LinearConstraint row;
  std::string kind;
  std::string dominator;  // keeper label for duplicate/dominated
  std::vector<std::pair<std::string, Rat>> multipliers;
};

struct ReduceResult {
  Polyhedron poly;
  std::vector<RemovedRow> removed;
};

// Exact irredundant description of P. Canonicalizes, drops duplicates and
// syntactically dominated rows, then removes LP-implied rows one at a time
// in canonical order. Empty input polyhedra are returned unchanged.
ReduceResult remove_redundant(const Polyhedron& P);

} // namespace tsf
