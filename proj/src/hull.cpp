#include "tsf/hull.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace tsf {

std::vector<std::string> hull_core_vars(Family f) {
  const Family basic = family_basic_of(f);
  if (basic == Family::BOF)
    throw std::invalid_argument("hull certification does not cover bof");
  std::vector<std::string> core = {"e[0]", "pc[1]", "pd[1]"};
  if (basic != Family::BO) {
    core.insert(core.end(), {"rcp[1]", "rcm[1]", "rdp[1]", "rdm[1]"});
  }
  if (family_has_investment(basic)) {
    core.insert(core.end(), {"cbar", "dbar", "ebar"});
  }
  core.push_back("delta[1]");
  return core;
}

DisjunctPair build_disjuncts(const StorageParams& p, Family f) {
  const Family basic = family_basic_of(f);
  const std::vector<std::string> core = hull_core_vars(basic);
  const std::string delta_id = core.back();

  DisjunctPair out;
  out.shared_vars.assign(core.begin(), core.end() - 1);

  // One period, free initial state; the builders run the structural checks.
  ModelInstance m = build_family(basic, p, 1, {}, BuildOptions{.e0_variable = true});
  Polyhedron full = m.to_polyhedron();

  Polyhedron on = fix_var(full, delta_id, 1);
  Polyhedron off = fix_var(full, delta_id, 0);
  out.charging = project(on, out.shared_vars, nullptr, &out.removed);
  out.discharging = project(off, out.shared_vars, nullptr, &out.removed);
  return out;
}

HullCertificate certify_hull(const StorageParams& p, Family f) {
  const Family basic = family_basic_of(f);
  const Family tight = family_tight_of(basic);

  HullCertificate cert;
  cert.params = p;
  cert.family = basic;

  const std::vector<std::string> core = hull_core_vars(basic);
  const std::string delta_id = core.back();

  DisjunctPair dj = build_disjuncts(p, basic);
  cert.removed_rows = dj.removed;

  cert.lifted = balas_lift(dj.charging, dj.discharging, dj.shared_vars, delta_id);
  cert.hull = project(cert.lifted, core, nullptr, &cert.removed_rows);

  ModelInstance tm = build_family(tight, p, 1, {}, BuildOptions{.e0_variable = true});
  cert.tight = project(tm.to_polyhedron(), core, nullptr, nullptr);

  PolyEqualResult pe = poly_equal(cert.hull, cert.tight);
  cert.witness = pe.witness;

  // Independent cross-check: the tight LP relaxation must not create any
  // vertex outside the tagged disjunct union, and every disjunct vertex must
  // be a point of the tight LP.
  cert.tight_lp_vertices = enumerate_vertices(cert.tight);
  cert.charging_vertices = enumerate_vertices(dj.charging);
  cert.discharging_vertices = enumerate_vertices(dj.discharging);

  const size_t db = core.size() - 1;
  cert.vertices_integral = true;
  cert.vertices_cross_checked = true;
  for (const auto& v : cert.tight_lp_vertices.points) {
    const Rat& d = v[db];
    if (d != 0 && d != 1) {
      cert.vertices_integral = false;
      continue;
    }
    std::vector<Rat> shared_pt(v.begin(), v.end() - 1);
    const Polyhedron& side = (d == 1) ? dj.charging : dj.discharging;
    if (!side.contains(shared_pt)) cert.vertices_cross_checked = false;
  }
  for (int side = 0; side < 2; ++side) {
    const VertexSet& vs = side == 0 ? cert.charging_vertices : cert.discharging_vertices;
    const Rat tag = side == 0 ? 1 : 0;
    for (const auto& pt : vs.points) {
      std::vector<Rat> full = pt;
      full.push_back(tag);
      if (!cert.tight.contains(full)) cert.vertices_cross_checked = false;
    }
  }

  cert.equality = pe.equal && cert.vertices_integral && cert.vertices_cross_checked;
  return cert;
}

namespace {

// Uniform numerator over denominators up to 10 keeps every derived quantity
// printable and the exact pipelines fast.
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat small_rat(std::mt19937_64& rng, int num_max) {
  int d = uniform_int(rng, 1, 10);
  return rational_reduce(uniform_int(rng, 1, num_max), d);
}

Rat efficiency(std::mt19937_64& rng) {
  if (uniform_int(rng, 0, 3) == 0) return 1;  // boundary: lossless
  int d = uniform_int(rng, 2, 10);
  return rational_reduce(uniform_int(rng, 1, d), d);
}

// A capacity in [0, bound]: sometimes exactly at the bound (the tightness
// assumptions hold with equality), sometimes zero (degenerate but legal),
// otherwise a random fraction of the bound.
Rat capacity_below(std::mt19937_64& rng, const Rat& bound) {
  int pick = uniform_int(rng, 0, 7);
  if (pick == 0) return bound;
  if (pick == 1) return 0;
  int m = uniform_int(rng, 1, 10);
  return bound * rational_reduce(uniform_int(rng, 0, m), m);
}

} // namespace

StorageParams random_valid_params(Family f, std::mt19937_64& rng) {
  const Family basic = family_basic_of(f);

  StorageParams p;
  switch (uniform_int(rng, 0, 5)) {
    case 0: p.delta_t = rational_reduce(1, 2); break;
    case 1: p.delta_t = 2; break;
    default: p.delta_t = 1; break;
  }
  p.eta_C = efficiency(rng);
  p.eta_D = efficiency(rng);

  if (family_has_investment(basic)) {
    // Greenfield investment data: nothing installed, capacities bought fresh.
    p.E0_installed = 0;
    p.PC0_installed = 0;
    p.PD0_installed = 0;
    p.theta = 0;
    if (uniform_int(rng, 0, 2) != 0) {
      int d = uniform_int(rng, 2, 10);
      p.theta = rational_reduce(uniform_int(rng, 0, d - 1), d);
    }
    p.E_invest_max = small_rat(rng, 40);
    const Rat room = p.E_invest_max * (1 - p.theta);
    p.C_max = capacity_below(rng, room / (p.eta_C * p.delta_t));
    p.D_max = capacity_below(rng, p.eta_D * room / p.delta_t);
    p.E_min = 0;
    p.E_max = p.E_invest_max;
    p.e_initial = 0;
    return p;
  }

  p.E_min = 0;
  if (uniform_int(rng, 0, 2) != 0) p.E_min = small_rat(rng, 30);
  const Rat span = small_rat(rng, 40);
  p.E_max = p.E_min + span;

  const Rat charge_bound = span / (p.eta_C * p.delta_t);
  const Rat discharge_bound = p.eta_D * span / p.delta_t;
  p.P_C_max = capacity_below(rng, charge_bound);
  p.P_D_max = capacity_below(rng, discharge_bound);
  if (family_has_reserves(basic)) {
    p.R_down = capacity_below(rng, charge_bound);
    p.R_up = capacity_below(rng, discharge_bound);
  }
  {
    int m = uniform_int(rng, 1, 10);
    p.e_initial = p.E_min + span * rational_reduce(uniform_int(rng, 0, m), m);
  }
  return p;
}

std::vector<HullCertificate> certify_random_batch(Family f, int n, uint64_t seed,
                                                  bool parallel) {
  if (n < 0) throw std::invalid_argument("certify_random_batch: n must be >= 0");

  // Draw every parameter set up front from one stream so results do not
  // depend on the schedule.
  const size_t count = static_cast<size_t>(n);
  std::mt19937_64 rng(seed);
  std::vector<StorageParams> ps;
  ps.reserve(count);
  for (int i = 0; i < n; ++i) ps.push_back(random_valid_params(f, rng));

  std::vector<HullCertificate> out(count);
  if (!parallel) {
    for (int i = 0; i < n; ++i) out[size_t(i)] = certify_hull(ps[size_t(i)], f);
    return out;
  }

  std::vector<std::exception_ptr> errs(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      out[size_t(i)] = certify_hull(ps[size_t(i)], f);
    } catch (...) {
      errs[size_t(i)] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace tsf
