#pragma once

#include "tsf/case_harness.hpp"
#include "tsf/hull.hpp"
#include "tsf/milp.hpp"
#include "tsf/replay.hpp"

#include <string>

namespace tsf {

// Malformed or semantically unusable input files.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp_file(const std::string& path);           // BadInput on failure
void spit_file(const std::string& path, const std::string& text);

// Bundled data directory: TIGHT_STORAGE_DATA env var when set, else the
// compiled-in location.
std::string data_dir();

// ---- StorageParams ----------------------------------------------------
// Keys are the StorageParams field names; omitted keys keep their defaults.
StorageParams params_from_json(const std::string& text);
StorageParams load_params(const std::string& path);
std::string params_to_json(const StorageParams& p);

// ---- Polyhedra ---------------------------------------------------------
// {"variables": [...], "constraints": [{"coeffs": {"e[0]": "1/1"},
//  "sense": "<=", "rhs": "50/1", "label": "..."}]}
std::string polyhedron_to_json(const Polyhedron& P);
Polyhedron polyhedron_from_json(const std::string& text);

// ---- Models ------------------------------------------------------------
std::string model_to_json(const ModelInstance& m);
ModelInstance model_from_json(const std::string& text);

// Minimal LP-text rendering for cross-checks with external solvers.
// Rationals print as decimals with the given precision; a header comment
// declares the precision so the file is self-describing.
std::string model_to_lp_text(const ModelInstance& m, int precision = 12);

// ---- Solve results -----------------------------------------------------
std::string result_to_json(const SolveResult& r, const ModelInstance& m);

// ---- Certificates and transcripts --------------------------------------
std::string certificate_to_json(const HullCertificate& c);
std::string replay_to_json(const HullReplay& r);

// ---- Scenarios ----------------------------------------------------------
// Schema: name, provenance, available, buses, horizon, demand (per bus),
// generators, storage (+storage_bus), reserve minima, optional line,
// objective kind, investment costs. A template with "available": false
// raises BadScenario naming the file.
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path);

// data_dir()/scenarios/<key>/<data>.json
Scenario load_bundled_scenario(const std::string& key, const std::string& data);

std::string report_to_json(const ExperimentReport& r);
std::string flex_report_to_json(const ReserveFlexReport& r);

} // namespace tsf
