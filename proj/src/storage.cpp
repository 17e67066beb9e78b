#include "tsf/storage.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace tsf {

std::string family_name(Family f) {
  switch (f) {
    case Family::BO: return "bo";
    case Family::TO: return "to";
    case Family::BOR: return "bor";
    case Family::TOR: return "tor";
    case Family::BIR: return "bir";
    case Family::TIR: return "tir";
    case Family::BOF: return "bof";
  }
  return "?";
}

Family family_parse(const std::string& s) {
  std::string l;
  for (char c : s) l.push_back((char)std::tolower((unsigned char)c));
  if (l == "bo") return Family::BO;
  if (l == "to") return Family::TO;
  if (l == "bor") return Family::BOR;
  if (l == "tor") return Family::TOR;
  if (l == "bir") return Family::BIR;
  if (l == "tir") return Family::TIR;
  if (l == "bof") return Family::BOF;
  throw std::invalid_argument("unknown model family: " + s);
}

bool family_has_reserves(Family f) {
  return f == Family::BOR || f == Family::TOR || f == Family::BOF;
}
bool family_has_investment(Family f) { return f == Family::BIR || f == Family::TIR; }
bool family_is_tight(Family f) {
  return f == Family::TO || f == Family::TOR || f == Family::TIR;
}
Family family_basic_of(Family f) {
  switch (f) {
    case Family::TO: return Family::BO;
    case Family::TOR: return Family::BOR;
    case Family::TIR: return Family::BIR;
    default: return f;
  }
}
Family family_tight_of(Family f) {
  switch (f) {
    case Family::BO: return Family::TO;
    case Family::BOR: return Family::TOR;
    case Family::BIR: return Family::TIR;
    case Family::TO: case Family::TOR: case Family::TIR: return f;
    default: throw std::invalid_argument("family " + family_name(f) + " has no tight counterpart");
  }
}

InvalidParams::InvalidParams(std::vector<std::string> v)
    : std::runtime_error(v.empty() ? "invalid parameters"
                                   : "invalid parameters: " +
                                         std::accumulate(std::next(v.begin()), v.end(), v[0],
                                                         [](std::string a, const std::string& b) {
                                                           return std::move(a) + "; " + b;
                                                         })),
      violations(std::move(v)) {}

Rat ReserveProfile::up_at(int t) const {
  if (t < 1 || (size_t)t > r_up_min.size()) return 0;
  return r_up_min[t - 1];
}
Rat ReserveProfile::down_at(int t) const {
  if (t < 1 || (size_t)t > r_down_min.size()) return 0;
  return r_down_min[t - 1];
}

std::vector<std::string> validate_params(const StorageParams& p, Family f, ParamCheck mode) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& m) { out.push_back(m); };
  const bool full = mode == ParamCheck::Full;

  if (!(p.eta_C > 0 && p.eta_C <= 1)) bad("eta_C must satisfy 0 < eta_C <= 1");
  if (!(p.eta_D > 0 && p.eta_D <= 1)) bad("eta_D must satisfy 0 < eta_D <= 1");
  if (!(p.delta_t > 0)) bad("delta_t must be positive");
  if (out.size() > 0) return out;  // the remaining checks divide by these

  const bool invest = family_has_investment(f);
  const bool reserves = family_has_reserves(f) || invest;

  if (!invest) {
    if (!(p.E_max > p.E_min)) bad("E_max > E_min must hold");
    if (!(p.E_min >= 0)) bad("E_min >= 0 must hold");
    if (!(p.P_C_max >= 0)) bad("P_C_max >= 0 must hold");
    if (!(p.P_D_max >= 0)) bad("P_D_max >= 0 must hold");
    Rat cap = p.E_max - p.E_min;
    Rat c_bound = cap / (p.eta_C * p.delta_t);
    Rat d_bound = cap * p.eta_D / p.delta_t;
    if (full && cap > 0) {
      if (p.P_C_max > c_bound) bad("P_C_max > (1/(eta_C*delta_t))*(E_max-E_min)");
      if (p.P_D_max > d_bound) bad("P_D_max > (eta_D/delta_t)*(E_max-E_min)");
    }
    if (reserves) {
      if (!(p.R_up >= 0)) bad("R_up >= 0 must hold");
      if (!(p.R_down >= 0)) bad("R_down >= 0 must hold");
      if (full && cap > 0) {
        if (p.R_down > c_bound) bad("R_down > (1/(eta_C*delta_t))*(E_max-E_min)");
        if (p.R_up > d_bound) bad("R_up > (eta_D/delta_t)*(E_max-E_min)");
      }
    }
    if (!(p.e_initial >= p.E_min && p.e_initial <= p.E_max))
      bad("e_initial must lie in [E_min, E_max]");
  } else {
    if (!(p.theta >= 0 && p.theta < 1)) bad("theta must satisfy 0 <= theta < 1");
    for (auto [v, n] : {std::pair<const Rat*, const char*>{&p.E0_installed, "E0_installed"},
                        {&p.PC0_installed, "PC0_installed"},
                        {&p.PD0_installed, "PD0_installed"},
                        {&p.C_max, "C_max"},
                        {&p.D_max, "D_max"},
                        {&p.E_invest_max, "E_invest_max"}})
      if (!(*v >= 0)) bad(std::string(n) + " >= 0 must hold");
    if (out.empty()) {
      Rat etot = p.E0_installed + p.E_invest_max;
      Rat c_bound = etot * (1 - p.theta) / (p.eta_C * p.delta_t);
      Rat d_bound = etot * (1 - p.theta) * p.eta_D / p.delta_t;
      if (full && p.PC0_installed + p.C_max > c_bound)
        bad("PC0_installed + C_max > (1/(eta_C*delta_t))*(E0_installed+E_invest_max)*(1-theta)");
      if (full && p.PD0_installed + p.D_max > d_bound)
        bad("PD0_installed + D_max > (eta_D/delta_t)*(E0_installed+E_invest_max)*(1-theta)");
      if (!(p.e_initial >= 0 && p.e_initial <= etot))
        bad("e_initial must lie in [0, E0_installed+E_invest_max]");
    }
  }
  return out;
}

} // namespace tsf
