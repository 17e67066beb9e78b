#include "tsf/fm.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsf {

LinearForm solve_equality_for(const LinearConstraint& eq, int var) {
  if (eq.sense != Sense::EQ) throw std::logic_error("solve_equality_for: not an equality");
  Rat c = eq.form.coeff(var);
  if (c == 0) throw std::logic_error("solve_equality_for: variable absent");
  // c*var + rest = rhs  ->  var = (rhs - rest)/c
  LinearForm out;
  out.constant = eq.rhs / c;
  for (const auto& [v, cv] : eq.form.coeffs) {
    if (v == var) continue;
    out.add(v, -cv / c);
  }
  return out;
}

namespace {

Polyhedron drop_var(const Polyhedron& P, int vi) {
  Polyhedron Q;
  Q.vars.reserve(P.vars.size() - 1);
  for (int i = 0; i < (int)P.vars.size(); ++i)
    if (i != vi) Q.vars.push_back(P.vars[i]);
  return Q;
}

// Remap a row that no longer mentions vi into the shrunken index space.
LinearConstraint shift_row(const LinearConstraint& r, int vi) {
  LinearConstraint out;
  out.sense = r.sense;
  out.rhs = r.rhs;
  out.label = r.label;
  out.form.constant = r.form.constant;
  for (const auto& [v, c] : r.form.coeffs) out.form.set(v < vi ? v : v - 1, c);
  return out;
}

// Keep the tightest rhs among LE rows sharing a coefficient vector.
void syntactic_prune(std::vector<LinearConstraint>& rows) {
  std::vector<LinearConstraint> kept;
  for (auto& r : rows) {
    if (r.form.coeffs.empty()) {
      // 0 <= rhs (or 0 == rhs). Drop when vacuous, keep as an infeasibility
      // marker otherwise.
      bool vacuous = (r.sense == Sense::LE) ? (r.rhs >= 0) : (r.rhs == 0);
      if (vacuous) continue;
      kept.push_back(r);
      continue;
    }
    bool subsumed = false;
    for (auto& k : kept) {
      if (k.sense != r.sense || !k.same_lhs(r)) continue;
      if (k.sense == Sense::EQ) {
        if (k.rhs == r.rhs) { subsumed = true; break; }
        continue;
      }
      if (k.rhs <= r.rhs) { subsumed = true; break; }
      k = r;  // r is tighter; keep its rhs and label
      subsumed = true;
      break;
    }
    if (!subsumed) kept.push_back(r);
  }
  rows = std::move(kept);
}

} // namespace

Polyhedron fm_eliminate(const Polyhedron& P, const std::string& var, FmStep* step) {
  int vi = P.var_index(var);
  if (vi < 0) throw std::logic_error("fm_eliminate: unknown variable " + var);
  if (step) { *step = FmStep{}; step->var = var; }

  // Prefer an exact pivot on an equality row mentioning the variable.
  int eq_at = -1;
  for (int i = 0; i < (int)P.rows.size(); ++i) {
    if (P.rows[i].sense == Sense::EQ && P.rows[i].form.coeff(vi) != 0) { eq_at = i; break; }
  }

  Polyhedron Q = drop_var(P, vi);

  if (eq_at >= 0) {
    const LinearConstraint& eq = P.rows[eq_at];
    LinearForm repl = solve_equality_for(eq, vi);
    if (step) { step->via_equality = true; step->equality = eq; }
    for (int i = 0; i < (int)P.rows.size(); ++i) {
      if (i == eq_at) continue;
      LinearConstraint r = P.rows[i];
      r.form.substitute(vi, repl);
      r.normalize();
      Q.rows.push_back(shift_row(r, vi));
    }
    syntactic_prune(Q.rows);
    return Q;
  }

  std::vector<LinearConstraint> lowers, uppers;
  for (const auto& r : P.rows) {
    Rat c = r.form.coeff(vi);
    if (c == 0) {
      Q.rows.push_back(shift_row(r, vi));
      if (step) step->untouched.push_back(r);
      continue;
    }
    // LE row c*var + rest <= rhs: c > 0 gives an upper bound, c < 0 a lower.
    if (c > 0) uppers.push_back(r); else lowers.push_back(r);
  }
  if (step) { step->lowers = lowers; step->uppers = uppers; }

  for (const auto& lo : lowers) {
    Rat cl = lo.form.coeff(vi);  // < 0
    for (const auto& up : uppers) {
      Rat cu = up.form.coeff(vi);  // > 0
      // cu*lo - cl*up cancels var with positive multipliers cu, -cl.
      LinearConstraint comb;
      comb.sense = Sense::LE;
      comb.form = linform_combine(lo.form, cu, up.form, -cl);
      comb.rhs = cu * lo.rhs - cl * up.rhs;
      comb.label = "fm(" + lo.label + " & " + up.label + ")";
      comb.normalize();
      if (step) step->combined.push_back(comb);
      Q.rows.push_back(shift_row(comb, vi));
    }
  }
  syntactic_prune(Q.rows);
  return Q;
}

Polyhedron project(const Polyhedron& P, const std::vector<std::string>& keep,
                   std::vector<FmStep>* trace, std::vector<RemovedRow>* removed) {
  for (const auto& k : keep) P.require_var(k);
  std::vector<std::string> drop;
  for (const auto& v : P.vars)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) drop.push_back(v);

  Polyhedron Q = P;
  for (const auto& v : drop) {
    FmStep step;
    Q = fm_eliminate(Q, v, trace ? &step : nullptr);
    if (trace) trace->push_back(std::move(step));
    ReduceResult rr = remove_redundant(Q);
    Q = std::move(rr.poly);
    if (removed)
      for (auto& r : rr.removed) removed->push_back(std::move(r));
  }
  // Reorder columns to the requested layout.
  return Q.with_vars(keep);
}

} // namespace tsf
