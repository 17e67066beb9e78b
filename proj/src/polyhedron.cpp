#include "tsf/polyhedron.hpp"
#include "tsf/lp_exact.hpp"

#include <algorithm>

namespace tsf {

int Polyhedron::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return int(i);
  return -1;
}

int Polyhedron::require_var(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) throw std::out_of_range("unknown variable: " + name);
  return i;
}

int Polyhedron::add_var(const std::string& name) {
  int i = var_index(name);
  if (i >= 0) return i;
  vars.push_back(name);
  return int(vars.size()) - 1;
}

void Polyhedron::canonicalize() {
  for (auto& r : rows) r.normalize();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LinearConstraint& a, const LinearConstraint& b) {
                     return LinearConstraint::compare(a, b) < 0;
                   });
  std::vector<LinearConstraint> kept;
  for (auto& r : rows) {
    if (!kept.empty() && LinearConstraint::compare(kept.back(), r) == 0) continue;
    kept.push_back(std::move(r));
  }
  rows = std::move(kept);
}

bool Polyhedron::contains(const std::vector<Rat>& x) const {
  for (auto& r : rows)
    if (!r.satisfied(x)) return false;
  return true;
}

std::vector<std::pair<std::string, Rat>>
Polyhedron::violations(const std::vector<Rat>& x) const {
  std::vector<std::pair<std::string, Rat>> out;
  for (auto& r : rows) {
    Rat v = r.violation(x);
    if (v != 0) out.emplace_back(r.label, v);
  }
  return out;
}

Polyhedron Polyhedron::with_vars(const std::vector<std::string>& target) const {
  std::vector<int> map(vars.size(), -1);
  Polyhedron out;
  out.vars = target;
  for (size_t i = 0; i < vars.size(); ++i) map[i] = out.var_index(vars[i]);
  for (auto& r : rows) {
    LinearConstraint nr = r;
    nr.form = r.form.remap(map);
    out.rows.push_back(std::move(nr));
  }
  return out;
}

void VertexSet::sort_unique() {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool VertexSet::contains_point(const std::vector<Rat>& x) const {
  return std::binary_search(points.begin(), points.end(), x);
}

bool is_empty(const Polyhedron& P) {
  LinearForm zero;
  return lp_solve_rows(P, zero).status == LPStatus::Infeasible;
}

bool is_bounded(const Polyhedron& P) {
  if (is_empty(P)) return true;
  for (size_t v = 0; v < P.vars.size(); ++v) {
    LinearForm x = LinearForm::term(int(v), Rat(1));
    if (lp_solve_rows(P, x).status == LPStatus::Unbounded) return false;
    if (lp_solve_rows(P, x, /*maximize=*/true).status == LPStatus::Unbounded)
      return false;
  }
  return true;
}

Polyhedron fix_var(const Polyhedron& P, const std::string& var, const Rat& value) {
  int vi = P.require_var(var);
  Polyhedron out;
  for (size_t i = 0; i < P.vars.size(); ++i)
    if (int(i) != vi) out.vars.push_back(P.vars[i]);
  std::vector<int> map(P.vars.size(), -1);
  for (size_t i = 0, k = 0; i < P.vars.size(); ++i)
    if (int(i) != vi) map[i] = int(k++);
  for (const auto& r : P.rows) {
    LinearConstraint nr = r;
    Rat c = r.form.coeff(vi);
    if (c != 0) {
      nr.rhs -= c * value;
      nr.form.set(vi, Rat(0));
    }
    nr.form = nr.form.remap(map);
    if (nr.form.is_constant()) {
      bool sat =
          nr.sense == Sense::LE ? nr.form.constant <= nr.rhs : nr.form.constant == nr.rhs;
      if (sat) continue;  // vacuous after substitution
    }
    nr.normalize();
    out.rows.push_back(std::move(nr));
  }
  return out;
}

namespace {

// Every row of Q must be implied by A; on failure produce the maximizing
// point of A as a witness against Q's row.
std::optional<PolyEqualWitness> first_violation(const Polyhedron& A,
                                                const Polyhedron& Q) {
  for (auto& row : Q.rows) {
    if (row.sense == Sense::LE) {
      RowCheck rc = check_row_implied(A, row);
      if (!rc.implied)
        return PolyEqualWitness{"", rc.point, row.label, rc.excess};
    } else {
      LinearConstraint le{row.form, Sense::LE, row.rhs, row.label};
      RowCheck rc = check_row_implied(A, le);
      if (!rc.implied)
        return PolyEqualWitness{"", rc.point, row.label, rc.excess};
      LinearForm neg = row.form;
      neg *= Rat(-1);
      LinearConstraint ge{neg, Sense::LE, -row.rhs, row.label};
      rc = check_row_implied(A, ge);
      if (!rc.implied)
        return PolyEqualWitness{"", rc.point, row.label, rc.excess};
    }
  }
  return std::nullopt;
}

} // namespace

PolyEqualResult poly_equal(const Polyhedron& A, const Polyhedron& B) {
  Polyhedron Bv = B.with_vars(A.vars);
  if (!is_empty(A) && !is_bounded(A)) throw Unbounded();
  if (!is_empty(Bv) && !is_bounded(Bv)) throw Unbounded();
  PolyEqualResult res;
  if (auto w = first_violation(A, Bv)) {
    w->side = "left-point-outside-right";
    res.witness = std::move(w);
    return res;
  }
  if (auto w = first_violation(Bv, A)) {
    w->side = "right-point-outside-left";
    res.witness = std::move(w);
    return res;
  }
  res.equal = true;
  return res;
}

} // namespace tsf
