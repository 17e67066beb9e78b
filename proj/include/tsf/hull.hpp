#pragma once

#include "tsf/balas.hpp"
#include "tsf/builders.hpp"
#include "tsf/fm.hpp"
#include "tsf/redundancy.hpp"
#include "tsf/vertex_enum.hpp"

#include <random>

namespace tsf {

// One-period variable space the hull statements live in: the state entering
// the period, the period's decisions, and any investment variables. The
// binary comes last.
std::vector<std::string> hull_core_vars(Family f);

// build_disjuncts: one-period charging (delta=1, pd=0) and discharging
// (delta=0, pc=0) polytopes of the basic family, derived mechanically by
// fixing delta in the basic model, projecting onto the shared variables and
// removing redundant rows (the machine analogue of the crossed-out rows).
// Shared variables are hull_core_vars minus the binary. Structural parameter
// problems throw InvalidParams; capacity-cap violations are allowed so that
// certification can demonstrate hull failure.
struct DisjunctPair {
  Polyhedron charging;
  Polyhedron discharging;
  std::vector<std::string> shared_vars;
  std::vector<RemovedRow> removed;  // rows pruned while deriving the pair
};
DisjunctPair build_disjuncts(const StorageParams& p, Family f);

struct HullCertificate {
  StorageParams params;
  Family family = Family::BO;        // basic side of the certified pair
  VertexSet charging_vertices;       // over shared vars (no binary)
  VertexSet discharging_vertices;
  VertexSet tight_lp_vertices;       // over the full core space
  bool equality = false;
  Polyhedron lifted;                 // Balas lift before projection
  Polyhedron hull;                   // projected + reduced lift
  Polyhedron tight;                  // tight one-period rows on the core space
  std::vector<RemovedRow> removed_rows;
  std::optional<PolyEqualWitness> witness;
  bool vertices_integral = true;     // every tight-LP vertex has binary in {0,1}
  bool vertices_cross_checked = true;
};

// Full pipeline: build_disjuncts -> balas_lift -> project -> remove_redundant,
// then poly_equal against the tight one-period rows projected onto the same
// space, plus bidirectional vertex checks. Exact throughout.
HullCertificate certify_hull(const StorageParams& p, Family f);

// Random parameters satisfying every validity assumption by construction:
// small rationals (denominators <= 10), occasional boundary cases (caps
// exactly at their limits, eta = 1, E_min = 0, theta = 0). Investment
// families draw greenfield data (installed capacities zero).
StorageParams random_valid_params(Family f, std::mt19937_64& rng);

// Deterministic fan-out for `certify --random`: parameter sets are drawn
// sequentially from the seed, then certified independently (in parallel when
// requested) and merged by index. The serial path is the reference the
// parallel path is checked against.
std::vector<HullCertificate> certify_random_batch(Family f, int n, uint64_t seed,
                                                  bool parallel);

} // namespace tsf
