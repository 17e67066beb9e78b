#include "tsf/milp.hpp"

#include "tsf/float_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tsf {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

SolveResult solve_lp(const ModelInstance& m) {
  if (m.has_binaries()) throw std::logic_error("solve_lp: relax the model first");
  LPResult r = lp_solve_rows(m.to_polyhedron(), m.objective, !m.minimize);
  SolveResult out;
  out.nodes_explored = 0;
  switch (r.status) {
    case LPStatus::Optimal:
      out.status = SolveStatus::Optimal;
      out.objective = r.objective;
      out.assignment = r.x;
      break;
    case LPStatus::Infeasible: out.status = SolveStatus::Infeasible; break;
    case LPStatus::Unbounded: out.status = SolveStatus::Unbounded; break;
  }
  return out;
}

SolveResult solve_lp_opt(const ModelInstance& m, const SolveOptions& opt) {
  if (!opt.use_float) return solve_lp(m);
  ExactifiedLp r = solve_lp_float(m);
  SolveResult out;
  out.status = r.status;
  out.objective = r.objective;
  out.assignment = r.x;
  out.nodes_explored = 0;
  return out;
}

namespace {

// Branch variable choice shared by both node backends. Values are exact for
// the exact backend; the float backend screens with doubles and re-checks the
// chosen node exactly before accepting an incumbent.
struct BranchPick {
  int var = -1;       // -1 means every binary is integral
};

// Most fractional = largest min(x, 1-x); ties by lowest period then name.
template <class ValueAt>
BranchPick pick_branch(const ModelInstance& m, const std::vector<int>& binaries,
                       ValueAt&& value_at, BranchRule rule) {
  BranchPick pick;
  Rat best_score = -1;
  for (int j : binaries) {
    Rat v = value_at(j);
    if (v == 0 || v == 1) continue;
    Rat score = v < 1 - v ? v : 1 - v;
    if (rule == BranchRule::FirstFractional) return {j};
    bool better = false;
    if (score > best_score) {
      better = true;
    } else if (score == best_score && pick.var >= 0) {
      const Variable& a = m.variables[size_t(j)];
      const Variable& b = m.variables[size_t(pick.var)];
      if (a.period != b.period ? a.period < b.period : a.name < b.name) better = true;
    }
    if (better) {
      best_score = score;
      pick.var = j;
    }
  }
  return pick;
}

bool improves(const ModelInstance& m, const Rat& cand, const Rat& incumbent) {
  return m.minimize ? cand < incumbent : cand > incumbent;
}

// Node bound can no longer beat the incumbent (ties kept on the first find).
bool bound_dominated(const ModelInstance& m, const Rat& bound, const Rat& incumbent) {
  return m.minimize ? bound >= incumbent : bound <= incumbent;
}

struct UnboundedStop {};

struct ExactBnb {
  const ModelInstance& base;
  const SolveOptions& opt;
  ModelInstance work;
  std::vector<int> binaries;
  SolveResult res;
  bool have_incumbent = false;

  ExactBnb(const ModelInstance& m, const SolveOptions& o) : base(m), opt(o), work(relax(m)) {
    for (size_t j = 0; j < m.variables.size(); ++j)
      if (m.variables[j].integ == Integrality::Binary) binaries.push_back(int(j));
  }

  void dive() {
    if (res.nodes_explored >= opt.node_limit) throw NodeLimit(opt.node_limit);
    ++res.nodes_explored;
    LPResult r = lp_solve_rows(work.to_polyhedron(), work.objective, !work.minimize);
    if (r.status == LPStatus::Infeasible) return;
    if (r.status == LPStatus::Unbounded) {
      // Binaries are boxed, so the improving ray lives in the continuous
      // part and survives any further fixing: the subtree is unbounded as
      // soon as it has one feasible point, which this node just exhibited.
      res.status = SolveStatus::Unbounded;
      throw UnboundedStop{};
    }
    if (have_incumbent && bound_dominated(base, r.objective, res.objective)) return;
    BranchPick pick = pick_branch(base, binaries, [&](int j) { return r.x[size_t(j)]; },
                                  opt.rule);
    if (pick.var < 0) {
      if (!have_incumbent || improves(base, r.objective, res.objective)) {
        have_incumbent = true;
        res.status = SolveStatus::Optimal;
        res.objective = r.objective;
        res.assignment = r.x;
        res.incumbent_history.emplace_back(res.nodes_explored, r.objective);
      }
      return;
    }
    Variable& v = work.variables[size_t(pick.var)];
    Rat lb0 = v.lb, ub0 = v.ub;
    v.lb = 1; v.ub = 1;   // charging branch first
    dive();
    v.lb = 0; v.ub = 0;
    dive();
    v.lb = lb0; v.ub = ub0;
  }

  SolveResult run() {
    res.status = SolveStatus::Infeasible;
    try {
      dive();
    } catch (const UnboundedStop&) {
      // res.status already set; assignment intentionally left empty
    }
    return res;
  }
};

// Float-mode tree search. Node relaxations run in doubles with warm dual
// restarts; any node that looks integral or optimal is re-verified in exact
// arithmetic before it can become the incumbent, so reported objectives and
// assignments are exact. Pruning compares double bounds against the exact
// incumbent through a safety margin, so borderline nodes are explored rather
// than cut off.
struct FloatBnb {
  const ModelInstance& base;
  const SolveOptions& opt;
  BnbLp lp;
  std::vector<int> binaries;
  SolveResult res;
  bool have_incumbent = false;
  double incumbent_f = 0;
  int depth = 0;
  long exactifies = 0;
  bool log = std::getenv("TSF_MIP_LOG") != nullptr;

  static constexpr double kIntTol = 1e-9;
  static constexpr double kMargin = 1e-6;

  FloatBnb(const ModelInstance& m, const SolveOptions& o)
      : base(m), opt(o), lp(relax(m)) {
    for (size_t j = 0; j < m.variables.size(); ++j)
      if (m.variables[j].integ == Integrality::Binary) binaries.push_back(int(j));
  }

  // Prune only when the double bound clears the exact incumbent by a safety
  // margin; borderline nodes are explored instead of trusting the doubles.
  bool pruned_by_bound(double bound) const {
    if (!have_incumbent) return false;
    double margin = kMargin * (1.0 + std::fabs(incumbent_f));
    return base.minimize ? bound >= incumbent_f + margin : bound <= incumbent_f - margin;
  }

  void accept_incumbent(const ExactifiedLp& cert) {
    if (cert.status != SolveStatus::Optimal) return;
    // Exact integrality check; a float-integral basic binary can still be
    // fractional in rationals, in which case the caller keeps branching.
    for (int j : binaries) {
      const Rat& v = cert.x[size_t(j)];
      if (v != 0 && v != 1) return;
    }
    if (!base.feasible(cert.x, true)) return;
    if (!have_incumbent || improves(base, cert.objective, res.objective)) {
      have_incumbent = true;
      res.status = SolveStatus::Optimal;
      res.objective = cert.objective;
      res.assignment = cert.x;
      res.incumbent_history.emplace_back(res.nodes_explored, cert.objective);
      incumbent_f = cert.objective.get_d();
    }
  }

  void dive() {
    if (res.nodes_explored >= opt.node_limit) throw NodeLimit(opt.node_limit);
    ++res.nodes_explored;
    if (!lp.reoptimize()) return;
    if (log && res.nodes_explored % 200 == 0)
      std::fprintf(stderr,
                   "[mip] nodes=%ld depth=%d bound=%.4f inc=%s%.4f exact=%ld iters=%ld\n",
                   res.nodes_explored, depth, lp.objective(),
                   have_incumbent ? "" : "none ", incumbent_f, exactifies,
                   lp.iterations());
    if (pruned_by_bound(lp.objective())) return;
    int branch = -1;
    double best = -1;
    for (int j : binaries) {
      double v = lp.value(j);
      if (v < kIntTol || v > 1 - kIntTol) continue;
      double score = std::min(v, 1 - v);
      bool better = score > best + 1e-12;
      if (!better && score > best - 1e-12 && branch >= 0) {
        const Variable& a = base.variables[size_t(j)];
        const Variable& b = base.variables[size_t(branch)];
        if (a.period != b.period ? a.period < b.period : a.name < b.name) better = true;
      }
      if (better) {
        best = score;
        branch = j;
      }
      if (opt.rule == BranchRule::FirstFractional && branch >= 0) break;
    }
    if (branch < 0) {
      ++exactifies;
      ExactifiedLp cert = lp.exactify();
      if (cert.status == SolveStatus::Optimal) {
        bool integral = true;
        for (int j : binaries) {
          const Rat& v = cert.x[size_t(j)];
          if (v != 0 && v != 1) { branch = j; integral = false; break; }
        }
        if (integral) {
          accept_incumbent(cert);
          return;
        }
      } else {
        return; // exact check says the node is infeasible after all
      }
    }
    lp.set_bounds(branch, 1.0, 1.0);
    ++depth;
    dive();
    lp.set_bounds(branch, 0.0, 0.0);
    dive();
    --depth;
    lp.set_bounds(branch, 0.0, 1.0);
  }

  SolveResult run() {
    res.status = SolveStatus::Infeasible;
    dive();
    return res;
  }
};

} // namespace

SolveResult solve_mip(const ModelInstance& m, const SolveOptions& opt) {
  if (!m.has_binaries()) {
    SolveResult r = solve_lp_opt(m, opt);
    r.nodes_explored = 1;
    if (r.status == SolveStatus::Optimal)
      r.incumbent_history.emplace_back(1, r.objective);
    return r;
  }
  if (opt.use_float) return FloatBnb(m, opt).run();
  return ExactBnb(m, opt).run();
}

Simultaneity count_simultaneity(const SolveResult& r, const ModelInstance& m) {
  if (r.status != SolveStatus::Optimal || r.assignment.size() != m.variables.size())
    throw NoSolution();
  Simultaneity s;
  for (size_t j = 0; j < m.variables.size(); ++j) {
    const Variable& v = m.variables[j];
    if (v.period <= 0 || v.name.rfind("pc[", 0) != 0) continue;
    int k = m.var_index("pd[" + std::to_string(v.period) + "]");
    if (k < 0) continue;
    const Rat& pc = r.assignment[j];
    const Rat& pd = r.assignment[size_t(k)];
    if (pc > 0 && pd > 0) ++s.periods;
    s.product_sum += pc * pd;
  }
  return s;
}

} // namespace tsf
