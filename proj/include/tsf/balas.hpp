#pragma once

#include "tsf/polyhedron.hpp"

namespace tsf {

// Exact disjunctive lift of conv((charging x {delta=1}) U (discharging x
// {delta=0})) for bounded nonempty polytopes over the same shared variable
// list. Output variables, in order: shared vars, delta_id, then the charging
// copies "<v>^1", the discharging copies "<v>^2", and the weights
// "<delta_id>^1", "<delta_id>^2". Rows:
//   <label>^1 / ^2   disjunct rows with rhs scaled by the weight
//   link:<v>         x_v - x_v^1 - x_v^2 = 0
//   link:<delta_id>  delta - delta^1 = 0
//   convexity        delta^1 + delta^2 = 1
//   <delta_id>^k-lb  delta^k >= 0
// Projecting onto shared_vars + {delta_id} yields the convex hull of the
// tagged union. Throws InvalidDisjunct on variable mismatch, an empty or
// unbounded disjunct, or delta_id colliding with a shared variable.
Polyhedron balas_lift(const Polyhedron& charging, const Polyhedron& discharging,
                      const std::vector<std::string>& shared_vars,
                      const std::string& delta_id);

} // namespace tsf
