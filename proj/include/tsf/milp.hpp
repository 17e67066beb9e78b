#pragma once

#include "tsf/lp_exact.hpp"
#include "tsf/model.hpp"

namespace tsf {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

const char* solve_status_name(SolveStatus s);

// Thrown when branch and bound exceeds its node budget.
struct NodeLimit : std::runtime_error {
  long limit;
  explicit NodeLimit(long lim)
      : std::runtime_error("node limit of " + std::to_string(lim) + " exceeded"), limit(lim) {}
};

// Thrown when a result without an optimal assignment is fed to an analysis
// that needs one.
struct NoSolution : std::runtime_error {
  NoSolution() : std::runtime_error("result carries no optimal assignment") {}
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Rat objective = 0;
  std::vector<Rat> assignment;  // indexed like ModelInstance::variables; empty unless Optimal
  long nodes_explored = 0;
  std::vector<std::pair<long, Rat>> incumbent_history;  // (node, objective) per improvement
};

enum class BranchRule { MostFractional, FirstFractional };

struct SolveOptions {
  BranchRule rule = BranchRule::MostFractional;
  long node_limit = 1000000;
  // Double-precision node relaxations with exact verification of incumbents
  // and of the final optimum. Never used by certificate paths.
  bool use_float = false;
};

// Exact LP solve of a continuous model (relax() first if it has binary
// marks; binaries present throw logic_error). Optimal results are
// certificate-checked internally: primal feasibility, dual feasibility and
// equal objective values, all exact.
SolveResult solve_lp(const ModelInstance& m);

// Same contract, but large models may route through the double-precision
// simplex; the returned basis is re-verified and, if need be, repaired in
// exact arithmetic, so the result is exact either way.
SolveResult solve_lp_opt(const ModelInstance& m, const SolveOptions& opt);

// Depth-first branch and bound over binary variables. Branching picks the
// most fractional binary (ties: lowest period, then name), delta = 1 child
// first. Deterministic for a fixed rule.
SolveResult solve_mip(const ModelInstance& m, const SolveOptions& opt = {});

struct Simultaneity {
  long periods = 0;    // #{t : pc[t] > 0 and pd[t] > 0}
  Rat product_sum = 0; // sum_t pc[t] * pd[t]
};

// Scans paired pc[t]/pd[t] variables of a storage model result.
// Throws NoSolution unless r is Optimal with a full assignment.
Simultaneity count_simultaneity(const SolveResult& r, const ModelInstance& m);

} // namespace tsf
