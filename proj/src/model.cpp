#include "tsf/model.hpp"

#include <stdexcept>

namespace tsf {

int ModelInstance::add_var(const std::string& name, Integrality integ) {
  Variable v;
  v.name = name;
  v.integ = integ;
  if (integ == Integrality::Binary) {
    v.has_lb = v.has_ub = true;
    v.lb = 0;
    v.ub = 1;
  }
  variables.push_back(std::move(v));
  return (int)variables.size() - 1;
}

int ModelInstance::add_var_bounded(const std::string& name, const Rat& lb, const Rat& ub,
                                   Integrality integ) {
  int i = add_var(name, integ);
  variables[i].has_lb = variables[i].has_ub = true;
  variables[i].lb = lb;
  variables[i].ub = ub;
  return i;
}

int ModelInstance::add_var_lb(const std::string& name, const Rat& lb, Integrality integ) {
  int i = add_var(name, integ);
  variables[i].has_lb = true;
  variables[i].lb = lb;
  return i;
}

int ModelInstance::var_index(const std::string& name) const {
  for (int i = 0; i < (int)variables.size(); ++i)
    if (variables[i].name == name) return i;
  return -1;
}

int ModelInstance::require_var(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) throw std::logic_error("unknown model variable: " + name);
  return i;
}

bool ModelInstance::has_binaries() const {
  for (const auto& v : variables)
    if (v.integ == Integrality::Binary) return true;
  return false;
}

std::vector<std::string> ModelInstance::var_names() const {
  std::vector<std::string> out;
  out.reserve(variables.size());
  for (const auto& v : variables) out.push_back(v.name);
  return out;
}

Polyhedron ModelInstance::to_polyhedron() const {
  Polyhedron P;
  P.vars = var_names();
  for (const auto& c : constraints) P.add(c);
  for (int i = 0; i < (int)variables.size(); ++i) {
    const auto& v = variables[i];
    LinearForm f;
    f.set(i, 1);
    if (v.has_lb) P.add(make_ge(f, v.lb, "lb:" + v.name));
    if (v.has_ub) P.add(make_le(f, v.ub, "ub:" + v.name));
  }
  return P;
}

bool ModelInstance::feasible(const std::vector<Rat>& x, bool check_integrality) const {
  return violations(x).empty() &&
         (!check_integrality || [&] {
           for (int i = 0; i < (int)variables.size(); ++i)
             if (variables[i].integ == Integrality::Binary && x[i] != 0 && x[i] != 1)
               return false;
           return true;
         }());
}

std::vector<std::pair<std::string, Rat>> ModelInstance::violations(
    const std::vector<Rat>& x) const {
  if (x.size() != variables.size())
    throw std::logic_error("assignment size does not match variable count");
  std::vector<std::pair<std::string, Rat>> out;
  for (const auto& c : constraints) {
    Rat v = c.violation(x);
    if (v > 0) out.emplace_back(c.label, v);
  }
  for (int i = 0; i < (int)variables.size(); ++i) {
    const auto& v = variables[i];
    if (v.has_lb && x[i] < v.lb) out.emplace_back("lb:" + v.name, v.lb - x[i]);
    if (v.has_ub && x[i] > v.ub) out.emplace_back("ub:" + v.name, x[i] - v.ub);
  }
  return out;
}

ModelInstance relax(const ModelInstance& m) {
  ModelInstance out = m;
  for (auto& v : out.variables) {
    if (v.integ == Integrality::Binary) {
      v.integ = Integrality::Continuous;
      v.has_lb = v.has_ub = true;
      v.lb = 0;
      v.ub = 1;
    }
  }
  return out;
}

} // namespace tsf
