#include "tsf/json_io.hpp"

#include "tsf/tables.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tsf {

using json = nlohmann::ordered_json;

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot write " + path);
  out << text;
}

std::string data_dir() {
  if (const char* env = std::getenv("TIGHT_STORAGE_DATA"); env && *env) return env;
  return TSF_DATA_DIR;
}

namespace {

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw BadInput("malformed JSON in " + what);
  return j;
}

// Rationals travel as "n/d" strings; integers are accepted on input, floats
// are rejected because they are not exact.
Rat jrat(const json& v, const std::string& key) {
  try {
    if (v.is_string()) return rat_parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
  } catch (const std::exception& e) {
    throw BadInput("field " + key + ": " + e.what());
  }
  throw BadInput("field " + key + ": expected an exact rational string");
}

Rat jrat_or(const json& o, const std::string& key, const Rat& dflt) {
  if (!o.contains(key)) return dflt;
  return jrat(o.at(key), key);
}

std::vector<Rat> jrat_vector(const json& v, const std::string& key) {
  if (!v.is_array()) throw BadInput("field " + key + ": expected an array");
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(jrat(x, key));
  return out;
}

json rat_vector_json(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(rat_str(x));
  return a;
}

json row_json(const LinearConstraint& c, const std::vector<std::string>& vars) {
  json coeffs = json::object();
  for (const auto& [i, v] : c.form.coeffs) coeffs[vars.at(size_t(i))] = rat_str(v);
  return json{{"coeffs", std::move(coeffs)},
              {"sense", c.sense == Sense::EQ ? "=" : "<="},
              {"rhs", rat_str(c.rhs)},
              {"label", c.label}};
}

// Rows may use "<=", ">=" or "=" on input.
void add_row_from_json(const json& jrow, const std::vector<std::string>& vars,
                       std::vector<LinearConstraint>& out,
                       int (*index_of)(const std::vector<std::string>&, const std::string&)) {
  if (!jrow.contains("coeffs") || !jrow.at("coeffs").is_object())
    throw BadInput("constraint without a coeffs object");
  LinearForm f;
  for (const auto& [name, val] : jrow.at("coeffs").items()) {
    int idx = index_of(vars, name);
    if (idx < 0) throw BadInput("constraint references unknown variable " + name);
    f.add(idx, jrat(val, name));
  }
  Rat rhs = jrat_or(jrow, "rhs", 0);
  std::string label = jrow.value("label", std::string());
  std::string sense = jrow.value("sense", std::string("<="));
  if (sense == "<=")
    out.push_back(make_le(std::move(f), std::move(rhs), std::move(label)));
  else if (sense == ">=")
    out.push_back(make_ge(std::move(f), std::move(rhs), std::move(label)));
  else if (sense == "=")
    out.push_back(make_eq(std::move(f), std::move(rhs), std::move(label)));
  else
    throw BadInput("unknown sense " + sense);
}

int plain_index(const std::vector<std::string>& vars, const std::string& name) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return int(i);
  return -1;
}

json params_json(const StorageParams& p) {
  return json{{"E_min", rat_str(p.E_min)},
              {"E_max", rat_str(p.E_max)},
              {"P_C_max", rat_str(p.P_C_max)},
              {"P_D_max", rat_str(p.P_D_max)},
              {"eta_C", rat_str(p.eta_C)},
              {"eta_D", rat_str(p.eta_D)},
              {"delta_t", rat_str(p.delta_t)},
              {"R_up", rat_str(p.R_up)},
              {"R_down", rat_str(p.R_down)},
              {"E0_installed", rat_str(p.E0_installed)},
              {"PC0_installed", rat_str(p.PC0_installed)},
              {"PD0_installed", rat_str(p.PD0_installed)},
              {"C_max", rat_str(p.C_max)},
              {"D_max", rat_str(p.D_max)},
              {"E_invest_max", rat_str(p.E_invest_max)},
              {"theta", rat_str(p.theta)},
              {"e_initial", rat_str(p.e_initial)}};
}

StorageParams params_from(const json& j) {
  if (!j.is_object()) throw BadInput("storage parameters: expected an object");
  StorageParams p;
  p.E_min = jrat_or(j, "E_min", p.E_min);
  p.E_max = jrat_or(j, "E_max", p.E_max);
  p.P_C_max = jrat_or(j, "P_C_max", p.P_C_max);
  p.P_D_max = jrat_or(j, "P_D_max", p.P_D_max);
  p.eta_C = jrat_or(j, "eta_C", p.eta_C);
  p.eta_D = jrat_or(j, "eta_D", p.eta_D);
  p.delta_t = jrat_or(j, "delta_t", p.delta_t);
  p.R_up = jrat_or(j, "R_up", p.R_up);
  p.R_down = jrat_or(j, "R_down", p.R_down);
  p.E0_installed = jrat_or(j, "E0_installed", p.E0_installed);
  p.PC0_installed = jrat_or(j, "PC0_installed", p.PC0_installed);
  p.PD0_installed = jrat_or(j, "PD0_installed", p.PD0_installed);
  p.C_max = jrat_or(j, "C_max", p.C_max);
  p.D_max = jrat_or(j, "D_max", p.D_max);
  p.E_invest_max = jrat_or(j, "E_invest_max", p.E_invest_max);
  p.theta = jrat_or(j, "theta", p.theta);
  p.e_initial = jrat_or(j, "e_initial", p.e_initial);
  const char* known[] = {"E_min", "E_max", "P_C_max", "P_D_max", "eta_C", "eta_D",
                         "delta_t", "R_up", "R_down", "E0_installed", "PC0_installed",
                         "PD0_installed", "C_max", "D_max", "E_invest_max", "theta",
                         "e_initial", "comment"};
  for (const auto& [key, val] : j.items()) {
    (void)val;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw BadInput("unknown storage parameter key " + key);
  }
  return p;
}

json poly_json(const Polyhedron& P) {
  json rows = json::array();
  for (const auto& r : P.rows) rows.push_back(row_json(r, P.vars));
  return json{{"variables", P.vars}, {"constraints", std::move(rows)}};
}

json vertices_json(const VertexSet& vs) {
  json a = json::array();
  for (const auto& pt : vs.points) a.push_back(rat_vector_json(pt));
  return a;
}

json removed_rows_json(const std::vector<RemovedRow>& removed) {
  json a = json::array();
  for (const auto& rr : removed) {
    json mult = json::object();
    for (const auto& [label, lam] : rr.multipliers) mult[label] = rat_str(lam);
    a.push_back(json{{"label", rr.row.label},
                     {"kind", rr.kind},
                     {"dominator", rr.dominator},
                     {"multipliers", std::move(mult)}});
  }
  return a;
}

json witness_json(const std::optional<PolyEqualWitness>& w) {
  if (!w) return nullptr;
  return json{{"side", w->side},
              {"point", rat_vector_json(w->point)},
              {"violated_label", w->violated_label},
              {"violation", rat_str(w->violation)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

StorageParams params_from_json(const std::string& text) {
  return params_from(parse_json(text, "storage parameters"));
}

StorageParams load_params(const std::string& path) {
  return params_from(parse_json(slurp_file(path), path));
}

std::string params_to_json(const StorageParams& p) { return dump(params_json(p)); }

std::string polyhedron_to_json(const Polyhedron& P) { return dump(poly_json(P)); }

Polyhedron polyhedron_from_json(const std::string& text) {
  json j = parse_json(text, "polyhedron");
  Polyhedron P;
  if (!j.contains("variables") || !j.at("variables").is_array())
    throw BadInput("polyhedron without a variables array");
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw BadInput("variable names must be strings");
    P.add_var(v.get<std::string>());
  }
  for (const auto& jrow : j.value("constraints", json::array()))
    add_row_from_json(jrow, P.vars, P.rows, plain_index);
  return P;
}

std::string model_to_json(const ModelInstance& m) {
  json vars = json::array();
  for (const auto& v : m.variables) {
    json jv{{"name", v.name}};
    if (v.has_lb) jv["lb"] = rat_str(v.lb);
    if (v.has_ub) jv["ub"] = rat_str(v.ub);
    if (v.integ == Integrality::Binary) jv["binary"] = true;
    if (v.period != 0) jv["period"] = v.period;
    vars.push_back(std::move(jv));
  }
  json rows = json::array();
  std::vector<std::string> names = m.var_names();
  for (const auto& c : m.constraints) rows.push_back(row_json(c, names));
  json obj = json::object();
  for (const auto& [i, v] : m.objective.coeffs) obj[names.at(size_t(i))] = rat_str(v);
  return dump(json{{"variables", std::move(vars)},
                   {"constraints", std::move(rows)},
                   {"objective", std::move(obj)},
                   {"objective_constant", rat_str(m.objective.constant)},
                   {"minimize", m.minimize},
                   {"horizon", m.horizon}});
}

ModelInstance model_from_json(const std::string& text) {
  json j = parse_json(text, "model");
  ModelInstance m;
  if (!j.contains("variables") || !j.at("variables").is_array())
    throw BadInput("model without a variables array");
  for (const auto& jv : j.at("variables")) {
    if (!jv.is_object() || !jv.contains("name"))
      throw BadInput("model variable without a name");
    Variable v;
    v.name = jv.at("name").get<std::string>();
    if (jv.contains("lb")) {
      v.has_lb = true;
      v.lb = jrat(jv.at("lb"), "lb");
    }
    if (jv.contains("ub")) {
      v.has_ub = true;
      v.ub = jrat(jv.at("ub"), "ub");
    }
    if (jv.value("binary", false)) {
      v.integ = Integrality::Binary;
      v.has_lb = v.has_ub = true;
      v.lb = 0;
      v.ub = 1;
    }
    v.period = jv.value("period", 0);
    if (m.var_index(v.name) >= 0) throw BadInput("duplicate variable " + v.name);
    m.variables.push_back(std::move(v));
  }
  std::vector<std::string> names = m.var_names();
  for (const auto& jrow : j.value("constraints", json::array()))
    add_row_from_json(jrow, names, m.constraints, plain_index);
  if (j.contains("objective")) {
    for (const auto& [name, val] : j.at("objective").items()) {
      int idx = m.var_index(name);
      if (idx < 0) throw BadInput("objective references unknown variable " + name);
      m.objective.add(idx, jrat(val, name));
    }
  }
  m.objective.constant = jrat_or(j, "objective_constant", 0);
  m.minimize = j.value("minimize", true);
  m.horizon = j.value("horizon", 0);
  return m;
}

std::string model_to_lp_text(const ModelInstance& m, int precision) {
  std::ostringstream os;
  os.precision(precision);
  auto num = [&](const Rat& q) {
    std::ostringstream s;
    s.precision(precision);
    s << rat_to_double(q);
    return s.str();
  };
  auto form = [&](const LinearForm& f) {
    std::string out;
    for (const auto& [i, c] : f.coeffs) {
      if (out.empty())
        out += (c < 0 ? "- " : "");
      else
        out += (c < 0 ? " - " : " + ");
      Rat a = abs(c);
      if (a != 1) out += num(a) + " ";
      out += m.variables[size_t(i)].name;
    }
    return out.empty() ? std::string("0") : out;
  };
  os << "\\ exact model rendered as decimals, precision " << precision << "\n";
  os << (m.minimize ? "Minimize" : "Maximize") << "\n obj: " << form(m.objective);
  if (m.objective.constant != 0) {
    Rat k = m.objective.constant;
    os << (k < 0 ? " - " : " + ") << num(abs(k));
  }
  os << "\nSubject To\n";
  int anon = 0;
  for (const auto& c : m.constraints) {
    std::string name = c.label.empty() ? "r" + std::to_string(anon++) : c.label;
    for (auto& ch : name)
      if (ch == ' ' || ch == ':' || ch == '[' || ch == ']' || ch == '=' || ch == ',') ch = '_';
    os << " " << name << ": " << form(c.form)
       << (c.sense == Sense::EQ ? " = " : " <= ") << num(c.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : m.variables) {
    if (v.has_lb && v.has_ub)
      os << " " << num(v.lb) << " <= " << v.name << " <= " << num(v.ub) << "\n";
    else if (v.has_lb)
      os << " " << v.name << " >= " << num(v.lb) << "\n";
    else if (v.has_ub)
      os << " -inf <= " << v.name << " <= " << num(v.ub) << "\n";
    else
      os << " " << v.name << " free\n";
  }
  bool any_bin = false;
  for (const auto& v : m.variables) any_bin = any_bin || v.integ == Integrality::Binary;
  if (any_bin) {
    os << "Binaries\n";
    for (const auto& v : m.variables)
      if (v.integ == Integrality::Binary) os << " " << v.name << "\n";
  }
  os << "End\n";
  return os.str();
}

std::string result_to_json(const SolveResult& r, const ModelInstance& m) {
  json j{{"status", solve_status_name(r.status)},
         {"objective", r.status == SolveStatus::Optimal ? json(rat_str(r.objective)) : json(nullptr)},
         {"nodes", r.nodes_explored}};
  if (!r.assignment.empty()) {
    json a = json::object();
    for (size_t i = 0; i < r.assignment.size(); ++i)
      a[m.variables[i].name] = rat_str(r.assignment[i]);
    j["assignment"] = std::move(a);
  }
  json hist = json::array();
  for (const auto& [node, obj] : r.incumbent_history)
    hist.push_back(json{{"node", node}, {"objective", rat_str(obj)}});
  j["incumbents"] = std::move(hist);
  return dump(j);
}

std::string certificate_to_json(const HullCertificate& c) {
  json j{{"family", family_name(c.family)},
         {"params", params_json(c.params)},
         {"equality", c.equality},
         {"vertices_integral", c.vertices_integral},
         {"vertices_cross_checked", c.vertices_cross_checked},
         {"core_vars", hull_core_vars(c.family)},
         {"charging_vertices", vertices_json(c.charging_vertices)},
         {"discharging_vertices", vertices_json(c.discharging_vertices)},
         {"tight_lp_vertices", vertices_json(c.tight_lp_vertices)},
         {"lifted_rows", c.lifted.rows.size()},
         {"hull", poly_json(c.hull)},
         {"tight", poly_json(c.tight)},
         {"removed_rows", removed_rows_json(c.removed_rows)},
         {"witness", witness_json(c.witness)}};
  return dump(j);
}

std::string replay_to_json(const HullReplay& r) {
  json notes = json::array();
  for (const auto& n : r.combined) {
    json mult = json::object();
    for (const auto& [label, lam] : n.multipliers) mult[label] = rat_str(lam);
    notes.push_back(json{{"label", n.row.label},
                         {"source", n.source},
                         {"in_hull", n.in_hull},
                         {"dominator", n.dominator},
                         {"multipliers", std::move(mult)}});
  }
  json j{{"params", params_json(r.params)},
         {"rewrite_verified", r.rewrite_verified},
         {"eliminated", r.elimination.var},
         {"combined", std::move(notes)},
         {"final_rows", poly_json(r.final_rows)},
         {"matches_tight", r.matches_tight},
         {"text", r.text}};
  return dump(j);
}

namespace {

GeneratorSpec generator_from(const json& j) {
  if (!j.is_object()) throw BadInput("generator: expected an object");
  GeneratorSpec g;
  g.name = j.value("name", std::string());
  if (g.name.empty()) throw BadInput("generator without a name");
  g.bus = j.value("bus", 0);
  g.p_min = jrat_or(j, "p_min", 0);
  g.p_max = jrat_or(j, "p_max", 0);
  g.ramp_up = jrat_or(j, "ramp_up", 0);
  g.ramp_down = jrat_or(j, "ramp_down", 0);
  g.cost_linear = jrat_or(j, "cost_linear", 0);
  g.cost_fixed = jrat_or(j, "cost_fixed", 0);
  g.initial_output = jrat_or(j, "initial_output", 0);
  g.commitment = j.value("commitment", false);
  return g;
}

json generator_json(const GeneratorSpec& g) {
  return json{{"name", g.name},
              {"bus", g.bus},
              {"p_min", rat_str(g.p_min)},
              {"p_max", rat_str(g.p_max)},
              {"ramp_up", rat_str(g.ramp_up)},
              {"ramp_down", rat_str(g.ramp_down)},
              {"cost_linear", rat_str(g.cost_linear)},
              {"cost_fixed", rat_str(g.cost_fixed)},
              {"initial_output", rat_str(g.initial_output)},
              {"commitment", g.commitment}};
}

} // namespace

Scenario scenario_from_json(const std::string& text) {
  json j = parse_json(text, "scenario");
  Scenario s;
  s.name = j.value("name", std::string("scenario"));
  s.provenance = j.value("provenance", std::string("approximated"));
  if (!j.value("available", true))
    throw BadScenario("scenario " + s.name + " (" + s.provenance +
                      ") is a template without data: " +
                      j.value("note", std::string("populate it to enable this run")));
  s.buses = j.value("buses", 1);
  s.horizon = j.value("horizon", 0);
  for (const auto& bus_demand : j.value("demand", json::array()))
    s.demand.push_back(jrat_vector(bus_demand, "demand"));
  for (const auto& jg : j.value("generators", json::array()))
    s.generators.push_back(generator_from(jg));
  if (j.contains("storage")) s.storage = params_from(j.at("storage"));
  s.storage_bus = j.value("storage_bus", 0);
  if (j.contains("reserve_up_min"))
    s.reserves.r_up_min = jrat_vector(j.at("reserve_up_min"), "reserve_up_min");
  if (j.contains("reserve_down_min"))
    s.reserves.r_down_min = jrat_vector(j.at("reserve_down_min"), "reserve_down_min");
  if (j.contains("line")) {
    LineSpec line;
    line.cost = jrat_or(j.at("line"), "cost", 0);
    line.capacity = jrat_or(j.at("line"), "capacity", 0);
    s.line = line;
  }
  std::string obj = j.value("objective", std::string("operational"));
  if (obj == "operational")
    s.objective = ObjectiveKind::Operational;
  else if (obj == "investment")
    s.objective = ObjectiveKind::Investment;
  else
    throw BadInput("unknown objective kind " + obj);
  s.invest_cost_c = jrat_or(j, "invest_cost_c", 1);
  s.invest_cost_d = jrat_or(j, "invest_cost_d", 1);
  s.invest_cost_e = jrat_or(j, "invest_cost_e", 1);
  // "repeat": tile the given demand (and reserve minima) that many times.
  // Lets a long horizon ship as one representative block.
  int repeat = j.value("repeat", 1);
  if (repeat < 1) throw BadInput("repeat must be >= 1");
  if (repeat > 1) {
    auto tile = [repeat](std::vector<Rat>& v) {
      if (v.empty()) return;
      std::vector<Rat> block = v;
      v.reserve(block.size() * repeat);
      for (int k = 1; k < repeat; ++k)
        v.insert(v.end(), block.begin(), block.end());
    };
    for (auto& row : s.demand) tile(row);
    tile(s.reserves.r_up_min);
    tile(s.reserves.r_down_min);
    if (s.horizon == 0 && !s.demand.empty())
      s.horizon = static_cast<int>(s.demand[0].size());
    else
      s.horizon *= repeat;
  }
  check_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  try {
    return scenario_from_json(slurp_file(path));
  } catch (const BadScenario& e) {
    throw BadScenario(std::string(e.what()) + " [" + path + "]");
  }
}

Scenario load_bundled_scenario(const std::string& key, const std::string& data) {
  if (data != "approximated" && data != "paper-faithful")
    throw BadInput("data selector must be approximated or paper-faithful, got " + data);
  return load_scenario(data_dir() + "/scenarios/" + key + "/" + data + ".json");
}

std::string report_to_json(const ExperimentReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    json jr{{"label", run.label},
            {"status", solve_status_name(run.status)},
            {"objective",
             run.status == SolveStatus::Optimal ? json(rat_str(run.objective)) : json(nullptr)},
            {"objective_rendered",
             run.status == SolveStatus::Optimal ? json(fmt_decimal(run.objective, 1)) : json(nullptr)},
            {"nodes", run.nodes},
            {"simultaneous_periods", run.sim.periods},
            {"simultaneity_product_sum", rat_str(run.sim.product_sum)}};
    if (run.has_line) jr["line"] = rat_str(run.line_value);
    json ex = json::object();
    for (const auto& [name, val] : run.excerpt) ex[name] = rat_str(val);
    jr["excerpt"] = std::move(ex);
    runs.push_back(std::move(jr));
  }
  return dump(json{{"scenario", r.scenario},
                   {"provenance", r.provenance},
                   {"ordering_ok", r.ordering_ok},
                   {"runs", std::move(runs)},
                   {"rendered", r.rendered}});
}

std::string flex_report_to_json(const ReserveFlexReport& r) {
  return dump(json{{"params", params_json(r.params)},
                   {"schedule", json{{"p_c", rat_str(r.p_c)}, {"p_d", rat_str(r.p_d)}}},
                   {"bor_max_down", rat_str(r.bor_max_down)},
                   {"bof_max_down", rat_str(r.bof_max_down)},
                   {"realizable_down", rat_str(r.realizable_down)},
                   {"bor_max_up", rat_str(r.bor_max_up)},
                   {"bof_max_up", rat_str(r.bof_max_up)},
                   {"realizable_up", rat_str(r.realizable_up)},
                   {"bof_overpromises_down", r.bof_overpromises_down},
                   {"rendered", r.rendered}});
}

} // namespace tsf
