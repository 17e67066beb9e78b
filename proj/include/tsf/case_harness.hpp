#pragma once

#include "tsf/builders.hpp"
#include "tsf/milp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsf {

struct GeneratorSpec {
  std::string name;
  int bus = 0;
  Rat p_min = 0;          // MW; acts as a must-run floor unless commitment is set
  Rat p_max = 0;          // MW
  Rat ramp_up = 0;        // MW/h; 0 leaves the direction unconstrained
  Rat ramp_down = 0;      // MW/h; 0 leaves the direction unconstrained
  Rat cost_linear = 0;    // $/MWh
  Rat cost_fixed = 0;     // $ per committed period
  Rat initial_output = 0; // MW entering period 1
  bool commitment = false; // adds a binary u[t] with p_min*u <= p <= p_max*u
};

struct LineSpec {
  Rat cost = 0;      // $ for building the candidate line
  Rat capacity = 0;  // MW, both directions
};

enum class ObjectiveKind { Operational, Investment };

// A two-bus-at-most power system around one storage unit. Demands are
// indexed [bus][period-1]; the optional candidate line connects bus 0 and
// bus 1 behind one investment binary.
struct Scenario {
  std::string name;
  std::string provenance;  // "paper-complete" or "approximated"
  int buses = 1;
  int horizon = 0;
  std::vector<std::vector<Rat>> demand;
  std::vector<GeneratorSpec> generators;
  StorageParams storage;
  int storage_bus = 0;
  ReserveProfile reserves;
  std::optional<LineSpec> line;
  ObjectiveKind objective = ObjectiveKind::Operational;
  Rat invest_cost_c = 1;  // $/MW of charge capacity
  Rat invest_cost_d = 1;  // $/MW of discharge capacity
  Rat invest_cost_e = 1;  // $/MWh of storage capacity
};

struct BadScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws BadScenario on inconsistent horizons or wiring.
void check_scenario(const Scenario& s);

// Power balance per bus and period, generator bounds/ramps (plus commitment
// binaries when requested), the optional line-investment binary with flow
// coupling, the chosen storage block, and the scenario's objective.
// storage_family names the basic family; tight swaps in its tight partner.
ModelInstance assemble(const Scenario& s, Family storage_family, bool tight);

struct ModelRun {
  std::string label;  // e.g. "BO-MIP"
  SolveStatus status = SolveStatus::Infeasible;
  Rat objective = 0;
  long nodes = 0;
  Simultaneity sim;
  bool has_line = false;
  Rat line_value = 0;  // investment binary's value when a line exists
  std::vector<std::pair<std::string, Rat>> excerpt;  // omitted on long horizons
};

struct ExperimentReport {
  std::string scenario;
  std::string provenance;
  std::vector<ModelRun> runs;  // basic-MIP, basic-LP, tight-MIP, tight-LP
  bool ordering_ok = false;    // basic-LP <= tight-LP <= tight-MIP = basic-MIP, exact
  std::string rendered;        // deterministic table, one-decimal cells
};

// Runners load data_dir()/scenarios/<key>/<data>.json ("approximated" by
// default; "paper-faithful" unlocks the dollar-exact assertions once
// populated). Solves run sequentially; reports are byte-identical across
// runs.
ExperimentReport run_uc(bool reserves, const std::string& data = "approximated");
ExperimentReport run_tep(const std::string& data = "approximated");
ExperimentReport run_multiperiod_uc(const std::string& data = "approximated");

// Generic four-model runner behind the above.
ExperimentReport run_scenario(const Scenario& s, Family basic_family, bool use_float);

// How much reserve the reserve-split model (BOR) and the facet-violating
// two-way model (BOF) each admit at a fixed one-period schedule, next to the
// deviation the physical storage could actually deliver. The realizable
// numbers come from optimizing over the basic one-period model, not from a
// formula.
struct ReserveFlexReport {
  StorageParams params;
  Rat p_c = 0, p_d = 0;     // fixed schedule
  Rat bor_max_down = 0;
  Rat bof_max_down = 0;
  Rat realizable_down = 0;
  Rat bor_max_up = 0;
  Rat bof_max_up = 0;
  Rat realizable_up = 0;
  bool bof_overpromises_down = false;
  std::string rendered;
};
ReserveFlexReport reserve_flexibility_report(const StorageParams& p, const Rat& p_c,
                                             const Rat& p_d);

} // namespace tsf
