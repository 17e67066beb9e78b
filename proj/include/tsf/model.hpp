#pragma once

#include "tsf/polyhedron.hpp"

namespace tsf {

enum class Integrality { Continuous, Binary };

struct Variable {
  std::string name;
  bool has_lb = false;
  Rat lb = 0;
  bool has_ub = false;
  Rat ub = 0;
  Integrality integ = Integrality::Continuous;
  int period = 0;  // 0 for global/investment variables, else 1..T
};

// Variables with bounds and integrality marks, labeled constraint rows and a
// linear objective. Binary variables always carry bounds [0,1].
struct ModelInstance {
  std::vector<Variable> variables;
  std::vector<LinearConstraint> constraints;
  LinearForm objective;
  bool minimize = true;
  int horizon = 0;

  int add_var(const std::string& name, Integrality integ = Integrality::Continuous);
  int add_var_bounded(const std::string& name, const Rat& lb, const Rat& ub,
                      Integrality integ = Integrality::Continuous);
  int add_var_lb(const std::string& name, const Rat& lb,
                 Integrality integ = Integrality::Continuous);
  int var_index(const std::string& name) const;
  int require_var(const std::string& name) const;

  void add(LinearConstraint c) { constraints.push_back(std::move(c)); }

  bool has_binaries() const;
  std::vector<std::string> var_names() const;

  // Rows plus bound rows ("lb:<var>" / "ub:<var>"); integrality ignored.
  Polyhedron to_polyhedron() const;

  // Exact feasibility of a full assignment against rows + bounds
  // (+ integrality when check_integrality).
  bool feasible(const std::vector<Rat>& x, bool check_integrality = false) const;
  std::vector<std::pair<std::string, Rat>> violations(const std::vector<Rat>& x) const;
};

// All binary marks become continuous with explicit [0,1] bounds. Idempotent.
ModelInstance relax(const ModelInstance& m);

} // namespace tsf
