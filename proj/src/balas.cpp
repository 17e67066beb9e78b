#include "tsf/balas.hpp"

#include "tsf/lp_exact.hpp"

#include <algorithm>

namespace tsf {

Polyhedron balas_lift(const Polyhedron& charging, const Polyhedron& discharging,
                      const std::vector<std::string>& shared_vars,
                      const std::string& delta_id) {
  if (charging.vars != shared_vars || discharging.vars != shared_vars)
    throw InvalidDisjunct("disjunct variable lists must equal shared_vars");
  if (std::find(shared_vars.begin(), shared_vars.end(), delta_id) != shared_vars.end())
    throw InvalidDisjunct("delta variable collides with a shared variable");
  if (is_empty(charging)) throw InvalidDisjunct("charging disjunct is empty");
  if (is_empty(discharging)) throw InvalidDisjunct("discharging disjunct is empty");
  if (!is_bounded(charging)) throw InvalidDisjunct("charging disjunct is unbounded");
  if (!is_bounded(discharging)) throw InvalidDisjunct("discharging disjunct is unbounded");

  const int n = (int)shared_vars.size();
  Polyhedron L;
  L.vars = shared_vars;
  const int delta = (int)L.vars.size();
  L.vars.push_back(delta_id);
  const int copy1 = (int)L.vars.size();
  for (const auto& v : shared_vars) L.vars.push_back(v + "^1");
  const int copy2 = (int)L.vars.size();
  for (const auto& v : shared_vars) L.vars.push_back(v + "^2");
  const int d1 = (int)L.vars.size();
  L.vars.push_back(delta_id + "^1");
  const int d2 = (int)L.vars.size();
  L.vars.push_back(delta_id + "^2");

  auto add_scaled = [&](const Polyhedron& D, int base, int weight, const char* tag) {
    for (const auto& r : D.rows) {
      LinearConstraint row;
      for (const auto& [v, c] : r.form.coeffs) row.form.set(base + v, c);
      row.form.add(weight, -(r.rhs - r.form.constant));
      row.sense = r.sense;
      row.rhs = 0;
      row.label = (r.label.empty() ? "row" : r.label) + tag;
      row.normalize();
      L.add(row);
    }
  };
  add_scaled(charging, copy1, d1, "^1");
  add_scaled(discharging, copy2, d2, "^2");

  for (int v = 0; v < n; ++v) {
    LinearForm f;
    f.set(v, 1);
    f.set(copy1 + v, -1);
    f.set(copy2 + v, -1);
    L.add(make_eq(f, 0, "link:" + shared_vars[v]));
  }
  {
    LinearForm f;
    f.set(delta, 1);
    f.set(d1, -1);
    L.add(make_eq(f, 0, "link:" + delta_id));
  }
  {
    LinearForm f;
    f.set(d1, 1);
    f.set(d2, 1);
    L.add(make_eq(f, 1, "convexity"));
  }
  {
    LinearForm f;
    f.set(d1, 1);
    L.add(make_ge(f, 0, delta_id + "^1-lb"));
  }
  {
    LinearForm f;
    f.set(d2, 1);
    L.add(make_ge(f, 0, delta_id + "^2-lb"));
  }
  return L;
}

} // namespace tsf
