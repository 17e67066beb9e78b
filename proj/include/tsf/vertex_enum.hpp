#pragma once

#include "tsf/polyhedron.hpp"

namespace tsf {

// Exact vertex enumeration by the double description method on the
// homogenization cone {(x,t) : Ax <= bt, t >= 0}. Extreme rays with t > 0
// scale to vertices; any ray with t = 0 means the polyhedron is unbounded
// (throws Unbounded). Size guard: at most 12 variables and 48 rows,
// otherwise TooLarge. Empty input gives an empty set.
VertexSet enumerate_vertices(const Polyhedron& P);

} // namespace tsf
