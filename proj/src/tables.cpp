#include "tsf/tables.hpp"

#include <sstream>

namespace tsf {

std::string fmt_decimal(const Rat& x, int places) {
  Rat pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  Rat mag = abs(x * pow10) + Rat(1, 2);
  mpz_class n = mag.get_num() / mag.get_den();
  std::string digits = n.get_str();
  if (places > 0) {
    while (int(digits.size()) <= places) digits.insert(digits.begin(), '0');
    digits.insert(digits.size() - size_t(places), ".");
  }
  if (sgn(x) < 0 && n != 0) digits.insert(digits.begin(), '-');
  return digits;
}

namespace {

// Row labels in display order: the fixed summary rows, then every excerpt
// key in first-appearance order across the runs.
std::vector<std::string> excerpt_keys(const ExperimentReport& r) {
  std::vector<std::string> keys;
  for (const auto& run : r.runs)
    for (const auto& [name, val] : run.excerpt) {
      (void)val;
      bool seen = false;
      for (const auto& k : keys) seen = seen || k == name;
      if (!seen) keys.push_back(name);
    }
  return keys;
}

std::string cell(const ModelRun& run, const std::string& key, bool* found) {
  for (const auto& [name, val] : run.excerpt)
    if (name == key) {
      if (found) *found = true;
      return fmt_decimal(val, 1);
    }
  if (found) *found = false;
  return "";
}

} // namespace

std::string report_markdown(const ExperimentReport& r) {
  std::ostringstream os;
  os << "## " << r.scenario << " (" << r.provenance << ")\n\n";
  os << "|  |";
  for (const auto& run : r.runs) os << " " << run.label << " |";
  os << "\n|---|";
  for (size_t i = 0; i < r.runs.size(); ++i) os << "---|";
  os << "\n";

  auto row = [&](const std::string& label, auto&& value) {
    os << "| " << label << " |";
    for (const auto& run : r.runs) os << " " << value(run) << " |";
    os << "\n";
  };
  row("status", [](const ModelRun& m) { return std::string(solve_status_name(m.status)); });
  row("total cost ($)", [](const ModelRun& m) {
    return m.status == SolveStatus::Optimal ? fmt_decimal(m.objective, 1) : std::string("-");
  });
  row("nodes", [](const ModelRun& m) { return std::to_string(m.nodes); });
  row("simultaneous periods", [](const ModelRun& m) { return std::to_string(m.sim.periods); });
  row("simultaneity product sum",
      [](const ModelRun& m) { return fmt_decimal(m.sim.product_sum, 1); });
  bool any_line = false;
  for (const auto& run : r.runs) any_line = any_line || run.has_line;
  if (any_line)
    row("line built", [](const ModelRun& m) {
      return m.has_line ? fmt_decimal(m.line_value, 1) : std::string("-");
    });
  for (const auto& key : excerpt_keys(r))
    row(key, [&key](const ModelRun& m) { return cell(m, key, nullptr); });

  os << "\nbound ordering basic-LP <= tight-LP <= tight-MIP = basic-MIP: "
     << (r.ordering_ok ? "holds (exact)" : "VIOLATED") << "\n";
  return os.str();
}

std::string report_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "row";
  for (const auto& run : r.runs) os << "," << run.label;
  os << "\n";
  auto row = [&](const std::string& label, auto&& value) {
    os << label;
    for (const auto& run : r.runs) os << "," << value(run);
    os << "\n";
  };
  row("status", [](const ModelRun& m) { return std::string(solve_status_name(m.status)); });
  row("objective", [](const ModelRun& m) {
    return m.status == SolveStatus::Optimal ? rat_str(m.objective) : std::string();
  });
  row("objective_rendered", [](const ModelRun& m) {
    return m.status == SolveStatus::Optimal ? fmt_decimal(m.objective, 1) : std::string();
  });
  row("nodes", [](const ModelRun& m) { return std::to_string(m.nodes); });
  row("simultaneous_periods", [](const ModelRun& m) { return std::to_string(m.sim.periods); });
  row("simultaneity_product_sum", [](const ModelRun& m) { return rat_str(m.sim.product_sum); });
  for (const auto& key : excerpt_keys(r))
    row(key, [&key](const ModelRun& m) {
      bool found = false;
      std::string s = cell(m, key, &found);
      return found ? s : std::string();
    });
  return os.str();
}

std::string flex_report_text(const ReserveFlexReport& r) {
  std::ostringstream os;
  os << "reserve flexibility at fixed schedule pc=" << rat_str_short(r.p_c)
     << " pd=" << rat_str_short(r.p_d) << "\n";
  os << "  max down reserve: split model " << fmt_decimal(r.bor_max_down, 1) << ", two-way model "
     << fmt_decimal(r.bof_max_down, 1) << ", physically realizable "
     << fmt_decimal(r.realizable_down, 1) << "\n";
  os << "  max up reserve:   split model " << fmt_decimal(r.bor_max_up, 1) << ", two-way model "
     << fmt_decimal(r.bof_max_up, 1) << ", physically realizable "
     << fmt_decimal(r.realizable_up, 1) << "\n";
  if (r.bof_overpromises_down)
    os << "  the two-way model admits more down reserve than the storage can deliver\n";
  return os.str();
}

std::string result_csv_row(const SolveResult& r, const ModelInstance& m) {
  std::ostringstream os;
  os << solve_status_name(r.status) << ","
     << (r.status == SolveStatus::Optimal ? rat_str(r.objective) : std::string()) << ","
     << r.nodes_explored;
  for (size_t i = 0; i < r.assignment.size(); ++i) {
    (void)m;
    os << "," << rat_str(r.assignment[i]);
  }
  os << "\n";
  return os.str();
}

} // namespace tsf
