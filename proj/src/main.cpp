#include "tsf/json_io.hpp"
#include "tsf/tables.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace tsf;

namespace {

// Exit contract: 0 success, 1 infeasible/false-certificate, 2 bad input,
// 3 resource limit.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kResource = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    spit_file(out_path, text);
}

Family parse_family_arg(const std::string& s) {
  try {
    return family_parse(s);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

int cmd_build(const std::string& family, const std::string& params_path, int T, bool do_relax,
              const std::string& format, const std::string& out) {
  Family f = parse_family_arg(family);
  StorageParams p = load_params(params_path);
  if (auto bad = validate_params(p, f, ParamCheck::Full); !bad.empty()) {
    for (const auto& v : bad) std::cerr << "invalid parameters: " << v << "\n";
    return kBadInput;
  }
  ModelInstance m = build_family(f, p, T);
  if (do_relax) m = relax(m);
  if (format == "json")
    emit(model_to_json(m), out);
  else if (format == "text")
    emit(model_to_lp_text(m), out);
  else
    throw BadInput("build supports --format json|text");
  return kOk;
}

int cmd_solve(const std::string& model_path, bool do_relax, bool use_float, long node_limit,
              const std::string& format, const std::string& out) {
  ModelInstance m = model_from_json(slurp_file(model_path));
  if (do_relax) m = relax(m);
  SolveOptions opt;
  opt.use_float = use_float;
  if (node_limit > 0) opt.node_limit = node_limit;
  SolveResult r = m.has_binaries() ? solve_mip(m, opt) : solve_lp_opt(relax(m), opt);
  if (format == "json")
    emit(result_to_json(r, m), out);
  else if (format == "csv")
    emit(result_csv_row(r, m), out);
  else if (format == "text") {
    std::ostringstream os;
    os << "status: " << solve_status_name(r.status) << "\n";
    if (r.status == SolveStatus::Optimal)
      os << "objective: " << rat_str_short(r.objective) << " (" << fmt_decimal(r.objective, 1)
         << ")\n";
    os << "nodes: " << r.nodes_explored << "\n";
    emit(os.str(), out);
  } else
    throw BadInput("solve supports --format json|csv|text");
  return r.status == SolveStatus::Optimal ? kOk : kNegative;
}

std::string certificate_summary(const HullCertificate& c, int index, bool with_index) {
  std::ostringstream os;
  if (with_index) os << index << ": ";
  os << "family " << family_name(c.family) << ", equality "
     << (c.equality ? "true" : "false");
  if (!c.equality && c.witness) {
    os << ", witness " << c.witness->side << " at (";
    for (size_t i = 0; i < c.witness->point.size(); ++i)
      os << (i ? ", " : "") << rat_str_short(c.witness->point[i]);
    os << ") violating " << c.witness->violated_label << " by "
       << rat_str_short(c.witness->violation);
  }
  os << "\n";
  return os.str();
}

int cmd_certify(const std::string& family, const std::string& params_path, int random_n,
                uint64_t seed, bool serial, const std::string& format, const std::string& out) {
  Family f = parse_family_arg(family);
  if (!params_path.empty()) {
    StorageParams p = load_params(params_path);
    HullCertificate c = certify_hull(p, f);
    if (format == "json")
      emit(certificate_to_json(c), out);
    else if (format == "text")
      emit(certificate_summary(c, 0, false), out);
    else
      throw BadInput("certify supports --format json|text");
    return c.equality ? kOk : kNegative;
  }
  if (random_n <= 0) throw BadInput("certify needs --params FILE or --random N");
  std::vector<HullCertificate> batch = certify_random_batch(f, random_n, seed, !serial);
  int good = 0;
  for (const auto& c : batch) good += c.equality ? 1 : 0;
  std::ostringstream os;
  os << "seed: " << seed << "\n";
  os << "family: " << family_name(f) << "\n";
  os << "equality: " << good << "/" << random_n << "\n";
  for (size_t i = 0; i < batch.size(); ++i)
    if (!batch[i].equality) os << certificate_summary(batch[i], int(i), true);
  if (format == "json") {
    std::ostringstream js;
    js << "{\n  \"seed\": " << seed << ",\n  \"family\": \"" << family_name(f)
       << "\",\n  \"equal\": " << good << ",\n  \"total\": " << random_n
       << ",\n  \"certificates\": [\n";
    for (size_t i = 0; i < batch.size(); ++i) {
      std::string one = certificate_to_json(batch[i]);
      if (!one.empty() && one.back() == '\n') one.pop_back();
      js << one << (i + 1 < batch.size() ? ",\n" : "\n");
    }
    js << "  ]\n}\n";
    emit(js.str(), out);
  } else if (format == "text")
    emit(os.str(), out);
  else
    throw BadInput("certify supports --format json|text");
  return good == random_n ? kOk : kNegative;
}

int cmd_replay(const std::string& params_path, const std::string& format,
               const std::string& out) {
  StorageParams p = load_params(params_path);
  HullReplay r = replay_derivation(p);
  if (format == "json")
    emit(replay_to_json(r), out);
  else if (format == "text")
    emit(r.text, out);
  else
    throw BadInput("replay supports --format json|text");
  return r.matches_tight && r.rewrite_verified ? kOk : kNegative;
}

int cmd_case(const std::string& which, const std::string& data, const std::string& format,
             const std::string& out) {
  ExperimentReport rep;
  if (which == "uc")
    rep = run_uc(false, data);
  else if (which == "uc-reserves")
    rep = run_uc(true, data);
  else if (which == "tep")
    rep = run_tep(data);
  else if (which == "multiperiod")
    rep = run_multiperiod_uc(data);
  else
    throw BadInput("case expects uc|uc-reserves|tep|multiperiod");
  if (format == "json")
    emit(report_to_json(rep), out);
  else if (format == "csv")
    emit(report_csv(rep), out);
  else if (format == "md" || format == "text")
    emit(rep.rendered, out);
  else
    throw BadInput("case supports --format md|csv|json|text");
  for (const auto& run : rep.runs)
    if (run.status != SolveStatus::Optimal) return kNegative;
  return kOk;
}

int cmd_flex(const std::string& params_path, const std::string& pc, const std::string& pd,
             const std::string& format, const std::string& out) {
  StorageParams p = load_params(params_path);
  ReserveFlexReport rep = reserve_flexibility_report(p, rat_parse(pc), rat_parse(pd));
  if (format == "json")
    emit(flex_report_to_json(rep), out);
  else if (format == "text")
    emit(rep.rendered, out);
  else
    throw BadInput("flex supports --format json|text");
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"storage scheduling formulations with exact convex-hull certification"};
  app.require_subcommand(1);

  std::string family, params_path, model_path, out_path;
  std::string format = "json";
  int T = 1;
  bool relax_flag = false, float_flag = false, serial_flag = false;
  long node_limit = 0;
  int random_n = 0;
  uint64_t seed = 0;
  std::string case_which, case_data = "approximated";
  std::string pc_text = "0", pd_text = "0";

  CLI::App* b = app.add_subcommand("build", "construct a storage model");
  b->add_option("family", family, "bo|to|bor|tor|bir|tir|bof")->required();
  b->add_option("--params", params_path, "storage parameter JSON")->required();
  b->add_option("-T,--periods", T, "number of periods");
  b->add_flag("--relax", relax_flag, "drop binary marks");
  b->add_option("--format", format, "json|text");
  b->add_option("-o,--out", out_path);

  CLI::App* s = app.add_subcommand("solve", "solve a model file");
  s->add_option("model", model_path, "model JSON")->required();
  s->add_flag("--relax", relax_flag, "solve the LP relaxation");
  s->add_flag("--float", float_flag, "double-precision path with exact verification");
  s->add_option("--node-limit", node_limit, "branch and bound node budget");
  s->add_option("--format", format, "json|csv|text");
  s->add_option("-o,--out", out_path);

  CLI::App* c = app.add_subcommand("certify", "certify the one-period convex hull");
  c->add_option("family", family, "bo|bor|bir (or their tight partners)")->required();
  c->add_option("--params", params_path, "storage parameter JSON");
  c->add_option("--random", random_n, "number of random parameter sets");
  c->add_option("--seed", seed, "random seed");
  c->add_flag("--serial", serial_flag, "disable the parallel fan-out");
  c->add_option("--format", format, "json|text");
  c->add_option("-o,--out", out_path);

  CLI::App* r = app.add_subcommand("replay", "step-by-step hull derivation transcript");
  r->add_option("--params", params_path, "storage parameter JSON")->required();
  r->add_option("--format", format, "json|text");
  r->add_option("-o,--out", out_path);

  CLI::App* k = app.add_subcommand("case", "bundled case studies");
  k->add_option("which", case_which, "uc|uc-reserves|tep|multiperiod")->required();
  k->add_option("--data", case_data, "approximated|paper-faithful");
  k->add_option("--format", format, "md|csv|json|text");
  k->add_option("-o,--out", out_path);

  CLI::App* x = app.add_subcommand("flex", "reserve flexibility at a fixed schedule");
  x->add_option("--params", params_path, "storage parameter JSON")->required();
  x->add_option("--pc", pc_text, "scheduled charging power");
  x->add_option("--pd", pd_text, "scheduled discharging power");
  x->add_option("--format", format, "json|text");
  x->add_option("-o,--out", out_path);

  // Subcommands whose natural default output is human text.
  r->parse_complete_callback([&] {
    if (r->count("--format") == 0) format = "text";
  });
  k->parse_complete_callback([&] {
    if (k->count("--format") == 0) format = "md";
  });
  x->parse_complete_callback([&] {
    if (x->count("--format") == 0) format = "text";
  });
  c->parse_complete_callback([&] {
    if (c->count("--format") == 0) format = "text";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (b->parsed()) return cmd_build(family, params_path, T, relax_flag, format, out_path);
    if (s->parsed())
      return cmd_solve(model_path, relax_flag, float_flag, node_limit, format, out_path);
    if (c->parsed())
      return cmd_certify(family, params_path, random_n, seed, serial_flag, format, out_path);
    if (r->parsed()) return cmd_replay(params_path, format, out_path);
    if (k->parsed()) return cmd_case(case_which, case_data, format, out_path);
    if (x->parsed()) return cmd_flex(params_path, pc_text, pd_text, format, out_path);
  } catch (const InvalidParams& e) {
    for (const auto& v : e.violations) std::cerr << "invalid parameters: " << v << "\n";
    return kBadInput;
  } catch (const NodeLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const TooLarge& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const BadScenario& e) {
    std::cerr << "bad scenario: " << e.what() << "\n";
    return kBadInput;
  } catch (const BadInput& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const ZeroDenominator& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const Unbounded&) {
    std::cerr << "the model is unbounded\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
