#include "tsf/replay.hpp"

#include "tsf/lp_exact.hpp"

#include <sstream>

namespace tsf {

namespace {

// The four-variable space the final hull lives in, plus the surviving
// charging state copy.
const std::vector<std::string> kCore = {"e[0]", "pc[1]", "pd[1]", "delta[1]"};
const std::vector<std::string> kRewritten = {"e[0]", "pc[1]", "pd[1]", "delta[1]",
                                             "e[0]^1"};

// The lift after substituting the link equalities: the discharging copies
// collapse onto the originals, the weights become delta and 1 - delta, and
// only the charging state copy e[0]^1 survives as an extra variable.
Polyhedron rewritten_system(const StorageParams& p) {
  Polyhedron R;
  R.vars = kRewritten;
  const int e = 0, pc = 1, pd = 2, dl = 3, e1 = 4;
  const Rat chg = p.eta_C * p.delta_t;      // energy charged per unit of pc
  const Rat dis = p.delta_t / p.eta_D;      // energy drained per unit of pd

  LinearForm f;
  f.set(e1, 1);
  f.add(dl, -p.E_min);
  R.add(make_ge(std::move(f), 0, "eq:method2"));

  f = {};
  f.set(e1, 1);
  f.add(pc, chg);
  f.add(dl, -p.E_max);
  R.add(make_le(std::move(f), 0, "eq:method1"));

  f = {};
  f.set(pc, 1);
  f.add(dl, -p.P_C_max);
  R.add(make_le(std::move(f), 0, "eq:method3"));

  f = {};
  f.set(pc, 1);
  R.add(make_ge(std::move(f), 0, "eq:method3-lb"));

  f = {};
  f.set(e, 1);
  f.add(e1, -1);
  f.add(pd, -dis);
  f.add(dl, p.E_min);
  R.add(make_ge(std::move(f), p.E_min, "eq:method4"));

  f = {};
  f.set(e, 1);
  f.add(e1, -1);
  f.add(dl, p.E_max);
  R.add(make_le(std::move(f), p.E_max, "eq:method5"));

  f = {};
  f.set(pd, 1);
  f.add(dl, p.P_D_max);
  R.add(make_le(std::move(f), p.P_D_max, "eq:method6"));

  f = {};
  f.set(pd, 1);
  R.add(make_ge(std::move(f), 0, "eq:method6-lb"));

  f = {};
  f.set(dl, 1);
  R.add(make_ge(std::move(f), 0, "lb:delta[1]"));

  f = {};
  f.set(dl, 1);
  R.add(make_le(std::move(f), 1, "ub:delta[1]"));

  return R;
}

bool row_in(const Polyhedron& P, const LinearConstraint& row) {
  for (const auto& r : P.rows)
    if (r.sense == row.sense && r.same_lhs(row) && r.rhs == row.rhs) return true;
  return false;
}

void print_rows(std::ostringstream& os, const Polyhedron& P, const char* indent) {
  for (const auto& r : P.rows)
    os << indent << r.label << ": " << row_text(r, P.vars) << "\n";
}

void print_removed(std::ostringstream& os, const std::vector<RemovedRow>& removed,
                   const std::vector<std::string>& vars, const char* indent) {
  for (const auto& rr : removed) {
    os << indent << rr.row.label << ": " << row_text(rr.row, vars) << "  [" << rr.kind;
    if (!rr.dominator.empty()) os << " of " << rr.dominator;
    if (!rr.multipliers.empty()) {
      os << "; multipliers:";
      for (const auto& [lab, lam] : rr.multipliers)
        os << " " << lab << " = " << rat_str_short(lam) << ",";
      os.seekp(-1, std::ios_base::cur);
    }
    os << "]\n";
  }
}

} // namespace

HullReplay replay_derivation(const StorageParams& p) {
  if (auto bad = validate_params(p, Family::BO, ParamCheck::Full); !bad.empty())
    throw InvalidParams(std::move(bad));

  HullReplay out;
  out.params = p;

  out.disjuncts = build_disjuncts(p, Family::BO);
  out.lifted = balas_lift(out.disjuncts.charging, out.disjuncts.discharging,
                          out.disjuncts.shared_vars, "delta[1]");

  out.rewritten = rewritten_system(p);
  {
    Polyhedron engine = project(out.lifted, kRewritten);
    out.rewrite_verified = poly_equal(engine, out.rewritten).equal;
  }

  Polyhedron after = fm_eliminate(out.rewritten, "e[0]^1", &out.elimination);
  out.final_rows = project(out.rewritten, kCore);

  ModelInstance tight = build_to(p, 1, BuildOptions{.e0_variable = true});
  Polyhedron tight_core = project(tight.to_polyhedron(), kCore);
  out.matches_tight = poly_equal(out.final_rows, tight_core).equal;

  // The four pair combinations, in the order fm_eliminate emits them:
  // lower bounds eq:method2, eq:method5 against upper bounds eq:method1,
  // eq:method4.
  static const char* kNames[4] = {"eq:red1", "eq:inchb1", "eq:inchb2", "eq:red2"};
  static const char* kDominators[4] = {"eq:method3", "", "", "eq:method6"};
  for (size_t i = 0; i < out.elimination.combined.size() && i < 4; ++i) {
    ReplayNote note;
    note.row = out.elimination.combined[i];
    note.source = note.row.label;
    note.row.label = kNames[i];
    note.in_hull = row_in(out.final_rows, note.row);
    if (!note.in_hull) {
      RowCheck rc = check_row_implied(out.final_rows, note.row);
      if (rc.implied) {
        note.dominator = kDominators[i][0] ? std::string("dominated by ") + kDominators[i]
                                           : std::string("implied by the final system");
        for (size_t j = 0; j < rc.multipliers.size(); ++j)
          if (rc.multipliers[j] != 0)
            note.multipliers.emplace_back(out.final_rows.rows[j].label,
                                          rc.multipliers[j]);
      } else {
        note.dominator = "not implied by the final system";
      }
    }
    out.combined.push_back(std::move(note));
  }

  std::ostringstream os;
  os << "one-period convex hull derivation, basic operation family\n";
  os << "params: E_min=" << rat_str_short(p.E_min) << " E_max=" << rat_str_short(p.E_max)
     << " P_C_max=" << rat_str_short(p.P_C_max)
     << " P_D_max=" << rat_str_short(p.P_D_max) << " eta_C=" << rat_str_short(p.eta_C)
     << " eta_D=" << rat_str_short(p.eta_D)
     << " delta_t=" << rat_str_short(p.delta_t) << "\n";

  os << "\n[1] disjunct polytopes over (e[0], pc[1], pd[1])\n";
  os << "  charging (delta[1] = 1):\n";
  print_rows(os, out.disjuncts.charging, "    ");
  os << "  discharging (delta[1] = 0):\n";
  print_rows(os, out.disjuncts.discharging, "    ");
  os << "  rows removed while reducing the pair:\n";
  print_removed(os, out.disjuncts.removed, out.disjuncts.shared_vars, "    ");

  os << "\n[2] disjunctive lift with weights delta[1]^1, delta[1]^2\n";
  print_rows(os, out.lifted, "  ");

  os << "\n[3] rewritten onto (e[0], pc[1], pd[1], delta[1], e[0]^1)\n";
  print_rows(os, out.rewritten, "  ");
  os << "  machine check, engine projection of the lift equals this system: "
     << (out.rewrite_verified ? "yes" : "NO") << "\n";

  os << "\n[4] eliminating e[0]^1\n";
  os << "  lower bounds:";
  for (const auto& r : out.elimination.lowers) os << " " << r.label;
  os << "\n  upper bounds:";
  for (const auto& r : out.elimination.uppers) os << " " << r.label;
  os << "\n";
  for (const auto& note : out.combined) {
    os << "  " << note.row.label << " = " << note.source << ": "
       << row_text(note.row, kRewritten) << "\n";
    if (note.in_hull) {
      os << "      in CH\n";
    } else {
      os << "      " << note.dominator;
      if (!note.multipliers.empty()) {
        os << "; multipliers:";
        for (const auto& [lab, lam] : note.multipliers)
          os << " " << lab << " = " << rat_str_short(lam) << ",";
        os.seekp(-1, std::ios_base::cur);
      }
      os << "\n";
    }
  }
  os << "  rows after the elimination, before reduction: " << after.rows.size() << "\n";

  os << "\n[5] final system over (e[0], pc[1], pd[1], delta[1])\n";
  print_rows(os, out.final_rows, "  ");

  os << "\n[6] equality with the tight one-period builder: "
     << (out.matches_tight ? "yes" : "NO") << "\n";

  out.text = os.str();
  return out;
}

} // namespace tsf
