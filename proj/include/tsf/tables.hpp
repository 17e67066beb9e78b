#pragma once

#include "tsf/case_harness.hpp"

#include <string>

namespace tsf {

// Fixed-point rendering with the given number of decimals, round half away
// from zero: fmt_decimal(519/3, 1) == "173.0". Internal values stay exact;
// this is presentation only.
std::string fmt_decimal(const Rat& x, int places = 1);

// One column per model run, one row per reported quantity. Deterministic.
std::string report_markdown(const ExperimentReport& r);
std::string report_csv(const ExperimentReport& r);

std::string flex_report_text(const ReserveFlexReport& r);

// status, objective, nodes, then the assignment in variable order.
std::string result_csv_row(const SolveResult& r, const ModelInstance& m);

} // namespace tsf
