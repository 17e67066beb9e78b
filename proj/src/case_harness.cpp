#include "tsf/case_harness.hpp"

#include "tsf/json_io.hpp"
#include "tsf/tables.hpp"

#include <cctype>
#include <sstream>

namespace tsf {

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string tlabel(const std::string& stem, const std::string& name, int t) {
  return stem + ":" + name + "[t=" + std::to_string(t) + "]";
}

} // namespace

void check_scenario(const Scenario& s) {
  if (s.horizon <= 0) throw BadScenario("horizon must be positive");
  if (s.buses < 1 || s.buses > 2) throw BadScenario("scenarios carry one or two buses");
  if (int(s.demand.size()) != s.buses)
    throw BadScenario("demand has " + std::to_string(s.demand.size()) + " bus rows, expected " +
                      std::to_string(s.buses));
  for (const auto& d : s.demand)
    if (int(d.size()) != s.horizon)
      throw BadScenario("demand row length " + std::to_string(d.size()) +
                        " does not match horizon " + std::to_string(s.horizon));
  auto reserve_len_ok = [&](size_t n) { return n == 0 || int(n) == s.horizon; };
  if (!reserve_len_ok(s.reserves.r_up_min.size()) ||
      !reserve_len_ok(s.reserves.r_down_min.size()))
    throw BadScenario("reserve minima must be empty or horizon-long");
  if (s.storage_bus < 0 || s.storage_bus >= s.buses)
    throw BadScenario("storage bus out of range");
  if (s.line && s.buses != 2) throw BadScenario("a candidate line needs two buses");
  if (s.line && (s.line->capacity < 0 || s.line->cost < 0))
    throw BadScenario("line capacity and cost must be nonnegative");
  for (const auto& g : s.generators) {
    if (g.bus < 0 || g.bus >= s.buses)
      throw BadScenario("generator " + g.name + " sits on an unknown bus");
    if (g.p_min < 0 || g.p_min > g.p_max)
      throw BadScenario("generator " + g.name + " needs 0 <= p_min <= p_max");
    if (g.ramp_up < 0 || g.ramp_down < 0)
      throw BadScenario("generator " + g.name + " has a negative ramp");
  }
}

ModelInstance assemble(const Scenario& s, Family storage_family, bool tight) {
  check_scenario(s);
  Family base = family_basic_of(storage_family);
  Family fam = tight ? family_tight_of(base) : base;
  if (auto bad = validate_params(s.storage, fam, ParamCheck::Full); !bad.empty())
    throw InvalidParams(std::move(bad));
  if (s.objective == ObjectiveKind::Investment && !family_has_investment(fam))
    throw BadScenario("investment objective needs an investment family");

  ModelInstance m = build_family(fam, s.storage, s.horizon, s.reserves, {});
  const Rat dt = s.storage.delta_t;

  for (const auto& g : s.generators) {
    for (int t = 1; t <= s.horizon; ++t) {
      Rat lb = g.commitment ? Rat(0) : g.p_min;
      int pg = m.add_var_bounded("pg_" + g.name + "[" + std::to_string(t) + "]", lb, g.p_max);
      m.variables[size_t(pg)].period = t;
      if (g.commitment) {
        int u = m.add_var("u_" + g.name + "[" + std::to_string(t) + "]", Integrality::Binary);
        m.variables[size_t(u)].period = t;
        LinearForm cap = LinearForm::term(pg, 1);
        cap.add(u, -g.p_max);
        m.add(make_le(std::move(cap), 0, tlabel("gen-cap", g.name, t)));
        LinearForm floor = LinearForm::term(u, g.p_min);
        floor.add(pg, -1);
        m.add(make_le(std::move(floor), 0, tlabel("gen-floor", g.name, t)));
      }
    }
    for (int t = 1; t <= s.horizon; ++t) {
      int pg = m.require_var("pg_" + g.name + "[" + std::to_string(t) + "]");
      if (g.ramp_up > 0) {
        LinearForm up = LinearForm::term(pg, 1);
        Rat rhs = g.ramp_up * dt;
        if (t == 1)
          rhs += g.initial_output;
        else
          up.add(m.require_var("pg_" + g.name + "[" + std::to_string(t - 1) + "]"), -1);
        m.add(make_le(std::move(up), std::move(rhs), tlabel("ramp-up", g.name, t)));
      }
      if (g.ramp_down > 0) {
        LinearForm dn = LinearForm::term(pg, -1);
        Rat rhs = g.ramp_down * dt;
        if (t == 1)
          rhs -= g.initial_output;
        else
          dn.add(m.require_var("pg_" + g.name + "[" + std::to_string(t - 1) + "]"), 1);
        m.add(make_le(std::move(dn), std::move(rhs), tlabel("ramp-down", g.name, t)));
      }
    }
  }

  int z_line = -1;
  if (s.line) {
    z_line = m.add_var("z_line", Integrality::Binary);
    for (int t = 1; t <= s.horizon; ++t) {
      int f = m.add_var_bounded("f[" + std::to_string(t) + "]", -s.line->capacity,
                                s.line->capacity);
      m.variables[size_t(f)].period = t;
      LinearForm out = LinearForm::term(f, 1);
      out.add(z_line, -s.line->capacity);
      m.add(make_le(std::move(out), 0, "line-cap-up[t=" + std::to_string(t) + "]"));
      LinearForm back = LinearForm::term(f, -1);
      back.add(z_line, -s.line->capacity);
      m.add(make_le(std::move(back), 0, "line-cap-dn[t=" + std::to_string(t) + "]"));
    }
  }

  for (int b = 0; b < s.buses; ++b) {
    for (int t = 1; t <= s.horizon; ++t) {
      LinearForm lhs;
      for (const auto& g : s.generators)
        if (g.bus == b)
          lhs.add(m.require_var("pg_" + g.name + "[" + std::to_string(t) + "]"), 1);
      if (b == s.storage_bus) {
        lhs.add(m.require_var("pd[" + std::to_string(t) + "]"), 1);
        lhs.add(m.require_var("pc[" + std::to_string(t) + "]"), -1);
      }
      if (s.line) {
        int f = m.require_var("f[" + std::to_string(t) + "]");
        lhs.add(f, b == 0 ? Rat(-1) : Rat(1));
      }
      m.add(make_eq(std::move(lhs), s.demand[size_t(b)][size_t(t - 1)],
                    "balance[b=" + std::to_string(b + 1) + ",t=" + std::to_string(t) + "]"));
    }
  }

  LinearForm obj;
  for (const auto& g : s.generators)
    for (int t = 1; t <= s.horizon; ++t) {
      if (g.cost_linear != 0)
        obj.add(m.require_var("pg_" + g.name + "[" + std::to_string(t) + "]"),
                g.cost_linear * dt);
      if (g.commitment && g.cost_fixed != 0)
        obj.add(m.require_var("u_" + g.name + "[" + std::to_string(t) + "]"), g.cost_fixed);
    }
  if (s.objective == ObjectiveKind::Investment) {
    if (z_line >= 0) obj.add(z_line, s.line->cost);
    obj.add(m.require_var("cbar"), s.invest_cost_c);
    obj.add(m.require_var("dbar"), s.invest_cost_d);
    obj.add(m.require_var("ebar"), s.invest_cost_e);
  }
  m.objective = std::move(obj);
  m.minimize = true;
  return m;
}

namespace {

ModelRun run_one(const ModelInstance& m, const std::string& label, bool as_mip, bool use_float) {
  SolveOptions opt;
  opt.use_float = use_float;
  SolveResult r = as_mip ? solve_mip(m, opt) : solve_lp_opt(relax(m), opt);
  ModelRun run;
  run.label = label;
  run.status = r.status;
  run.nodes = r.nodes_explored;
  if (r.status == SolveStatus::Optimal) {
    run.objective = r.objective;
    run.sim = count_simultaneity(r, m);
    int zi = m.var_index("z_line");
    if (zi >= 0) {
      run.has_line = true;
      run.line_value = r.assignment[size_t(zi)];
    }
    if (m.horizon <= 8)
      for (size_t i = 0; i < m.variables.size(); ++i)
        run.excerpt.emplace_back(m.variables[i].name, r.assignment[i]);
  }
  return run;
}

} // namespace

ExperimentReport run_scenario(const Scenario& s, Family basic_family, bool use_float) {
  Family base = family_basic_of(basic_family);
  Family tight = family_tight_of(base);
  ModelInstance basic_model = assemble(s, base, false);
  ModelInstance tight_model = assemble(s, base, true);
  std::string bn = upper(family_name(base));
  std::string tn = upper(family_name(tight));

  ExperimentReport rep;
  rep.scenario = s.name;
  rep.provenance = s.provenance;
  rep.runs.push_back(run_one(basic_model, bn + "-MIP", true, use_float));
  rep.runs.push_back(run_one(basic_model, bn + "-LP", false, use_float));
  rep.runs.push_back(run_one(tight_model, tn + "-MIP", true, use_float));
  rep.runs.push_back(run_one(tight_model, tn + "-LP", false, use_float));

  const ModelRun& bmip = rep.runs[0];
  const ModelRun& blp = rep.runs[1];
  const ModelRun& tmip = rep.runs[2];
  const ModelRun& tlp = rep.runs[3];
  bool all_opt = true;
  for (const auto& run : rep.runs) all_opt = all_opt && run.status == SolveStatus::Optimal;
  rep.ordering_ok = all_opt && blp.objective <= tlp.objective &&
                    tlp.objective <= tmip.objective && tmip.objective == bmip.objective;
  rep.rendered = report_markdown(rep);
  return rep;
}

ExperimentReport run_uc(bool reserves, const std::string& data) {
  Scenario s = load_bundled_scenario(reserves ? "uc_reserves" : "uc", data);
  return run_scenario(s, reserves ? Family::BOR : Family::BO, false);
}

ExperimentReport run_tep(const std::string& data) {
  Scenario s = load_bundled_scenario("tep", data);
  return run_scenario(s, Family::BIR, false);
}

ExperimentReport run_multiperiod_uc(const std::string& data) {
  Scenario s = load_bundled_scenario("multiperiod", data);
  return run_scenario(s, Family::BO, true);
}

namespace {

void pin_var(ModelInstance& m, const std::string& name, const Rat& value) {
  int i = m.require_var(name);
  m.variables[size_t(i)].has_lb = m.variables[size_t(i)].has_ub = true;
  m.variables[size_t(i)].lb = m.variables[size_t(i)].ub = value;
}

// Maximum of one variable over a family's one-period set with the schedule
// pinned. The solve is a tiny MIP (the period's binary is free).
Rat max_var_at_schedule(Family f, const StorageParams& p, const Rat& p_c, const Rat& p_d,
                        const std::string& var) {
  ModelInstance m = build_family(f, p, 1, {});
  pin_var(m, "pc[1]", p_c);
  pin_var(m, "pd[1]", p_d);
  m.objective = LinearForm::term(m.require_var(var), -1);
  SolveResult r = solve_mip(m);
  if (r.status != SolveStatus::Optimal)
    throw BadScenario("schedule pc=" + rat_str_short(p_c) + " pd=" + rat_str_short(p_d) +
                      " is infeasible for " + family_name(f));
  return -r.objective;
}

// Best deliverable net output change over the physical one-period set,
// signed: direction +1 explores extra output (up reserve), -1 extra
// consumption (down reserve).
Rat realizable_deviation(const StorageParams& p, const Rat& p_c, const Rat& p_d, int direction) {
  ModelInstance m = build_family(Family::BO, p, 1, {});
  int pd = m.require_var("pd[1]");
  int pc = m.require_var("pc[1]");
  LinearForm net = LinearForm::term(pd, -direction);
  net.add(pc, direction);
  m.objective = std::move(net);  // minimize direction*(pc - pd)
  SolveResult r = solve_mip(m);
  if (r.status != SolveStatus::Optimal)
    throw BadScenario("storage parameters admit no feasible operating point");
  Rat best_net = r.assignment[size_t(pd)] - r.assignment[size_t(pc)];
  Rat scheduled_net = p_d - p_c;
  return direction > 0 ? best_net - scheduled_net : scheduled_net - best_net;
}

} // namespace

ReserveFlexReport reserve_flexibility_report(const StorageParams& p, const Rat& p_c,
                                             const Rat& p_d) {
  for (Family f : {Family::BOR, Family::BOF})
    if (auto bad = validate_params(p, f, ParamCheck::Full); !bad.empty())
      throw InvalidParams(std::move(bad));
  ReserveFlexReport rep;
  rep.params = p;
  rep.p_c = p_c;
  rep.p_d = p_d;
  rep.bor_max_down = max_var_at_schedule(Family::BOR, p, p_c, p_d, "rdn[1]");
  rep.bof_max_down = max_var_at_schedule(Family::BOF, p, p_c, p_d, "rdn[1]");
  rep.bor_max_up = max_var_at_schedule(Family::BOR, p, p_c, p_d, "rup[1]");
  rep.bof_max_up = max_var_at_schedule(Family::BOF, p, p_c, p_d, "rup[1]");
  rep.realizable_down = realizable_deviation(p, p_c, p_d, -1);
  rep.realizable_up = realizable_deviation(p, p_c, p_d, +1);
  rep.bof_overpromises_down = rep.bof_max_down > rep.realizable_down;
  rep.rendered = flex_report_text(rep);
  return rep;
}

} // namespace tsf
