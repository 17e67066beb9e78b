#pragma once

#include "tsf/constraint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsf {

struct Unbounded : std::runtime_error {
  Unbounded() : std::runtime_error("polyhedron is unbounded") {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidDisjunct : std::runtime_error {
  explicit InvalidDisjunct(const std::string& what) : std::runtime_error(what) {}
};

// H-representation over an ordered variable list.
struct Polyhedron {
  std::vector<std::string> vars;
  std::vector<LinearConstraint> rows;

  int var_index(const std::string& name) const;
  int require_var(const std::string& name) const;
  int add_var(const std::string& name);

  void add(LinearConstraint c) { rows.push_back(std::move(c)); }

  // Normalize all rows, sort lexicographically, drop exact duplicates
  // (keeping the first label). Canonical form is byte-stable.
  void canonicalize();

  // Exact, for rational points indexed like `vars`.
  bool contains(const std::vector<Rat>& x) const;
  std::vector<std::pair<std::string, Rat>> violations(const std::vector<Rat>& x) const;

  // Reorder/rename onto `target_vars`; every live variable must be present
  // in the target list.
  Polyhedron with_vars(const std::vector<std::string>& target_vars) const;
};

// Distinct basic feasible points, sorted lexicographically.
struct VertexSet {
  std::vector<std::vector<Rat>> points;

  bool contains_point(const std::vector<Rat>& x) const;
  void sort_unique();
};

bool is_empty(const Polyhedron& P);
bool is_bounded(const Polyhedron& P);

// Substitute a constant for one variable and drop it from the variable list.
// Rows that collapse to constants are dropped when satisfied and kept as
// empty-form infeasibility markers otherwise.
Polyhedron fix_var(const Polyhedron& P, const std::string& var, const Rat& value);

struct PolyEqualWitness {
  std::string side;           // "left-point-outside-right" | "right-point-outside-left"
  std::vector<Rat> point;
  std::string violated_label; // row of the other polyhedron
  Rat violation = 0;
};

struct PolyEqualResult {
  bool equal = false;
  std::optional<PolyEqualWitness> witness;
};

// Exact set equality (same variable lists required, any order).
PolyEqualResult poly_equal(const Polyhedron& A, const Polyhedron& B);

} // namespace tsf
