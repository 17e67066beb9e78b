#include "tsf/builders.hpp"

namespace tsf {

namespace {

std::string lab(const std::string& id, int t) {
  return "eq:" + id + "[t=" + std::to_string(t) + "]";
}

// Shared scaffolding for all seven families.
struct Ctx {
  const StorageParams& p;
  int T;
  BuildOptions opt;
  ModelInstance m;

  // per-period ids (index 0 unused, 1..T)
  std::vector<int> e, pc, pd, dl;          // dl = delta
  std::vector<int> rcp, rcm, rdp, rdm;     // split reserves
  std::vector<int> rup, rdn;               // totals
  int e0 = -1, cbar = -1, dbar = -1, ebar = -1;

  Rat etaC_dt, dt_over_etaD;

  Ctx(const StorageParams& p_, int T_, const BuildOptions& o, Family f) : p(p_), T(T_), opt(o) {
    auto viol = validate_params(p, f, ParamCheck::Structural);
    if (!viol.empty()) throw InvalidParams(std::move(viol));
    if (T < 1) throw InvalidParams({"horizon T must be >= 1"});
    m.horizon = T;
    etaC_dt = p.eta_C * p.delta_t;
    dt_over_etaD = p.delta_t / p.eta_D;
  }

  void period_vars(bool reserves, bool totals) {
    e.assign(T + 1, -1);
    pc.assign(T + 1, -1);
    pd.assign(T + 1, -1);
    dl.assign(T + 1, -1);
    if (reserves) {
      rcp.assign(T + 1, -1);
      rcm.assign(T + 1, -1);
      rdp.assign(T + 1, -1);
      rdm.assign(T + 1, -1);
    }
    if (totals) {
      rup.assign(T + 1, -1);
      rdn.assign(T + 1, -1);
    }
    if (opt.e0_variable) e0 = m.add_var_lb("e[0]", 0);
    for (int t = 1; t <= T; ++t) {
      auto pv = [&](int id) { m.variables[size_t(id)].period = t; return id; };
      e[t] = pv(m.add_var_lb("e[" + std::to_string(t) + "]", 0));
      pc[t] = pv(m.add_var_lb("pc[" + std::to_string(t) + "]", 0));
      pd[t] = pv(m.add_var_lb("pd[" + std::to_string(t) + "]", 0));
      dl[t] = pv(m.add_var("delta[" + std::to_string(t) + "]", Integrality::Binary));
      if (reserves) {
        rcp[t] = pv(m.add_var_lb("rcp[" + std::to_string(t) + "]", 0));
        rcm[t] = pv(m.add_var_lb("rcm[" + std::to_string(t) + "]", 0));
        rdp[t] = pv(m.add_var_lb("rdp[" + std::to_string(t) + "]", 0));
        rdm[t] = pv(m.add_var_lb("rdm[" + std::to_string(t) + "]", 0));
      }
      if (totals) {
        rup[t] = pv(m.add_var_lb("rup[" + std::to_string(t) + "]", 0));
        rdn[t] = pv(m.add_var_lb("rdn[" + std::to_string(t) + "]", 0));
      }
    }
  }

  void invest_vars() {
    cbar = m.add_var_lb("cbar", 0);
    dbar = m.add_var_lb("dbar", 0);
    ebar = m.add_var_lb("ebar", 0);
  }

  // e_t = e_{t-1} + etaC pc dt - (1/etaD) pd dt, the balance every family shares.
  void balance(int t) {
    LinearForm f;
    f.set(e[t], 1);
    f.add(pc[t], -etaC_dt);
    f.add(pd[t], dt_over_etaD);
    Rat rhs = 0;
    if (t > 1) f.set(e[t - 1], -1);
    else if (opt.e0_variable) f.set(e0, -1);
    else rhs = p.e_initial;
    m.add(make_eq(std::move(f), rhs, lab("bso-a", t)));
  }

  // Contribution of e_{t-1} to a row: either the variable or the constant.
  // Returns the constant shift for the rhs.
  Rat prev_e(LinearForm& f, int t, const Rat& coeff) {
    if (t > 1) { f.add(e[t - 1], coeff); return 0; }
    if (opt.e0_variable) { f.add(e0, coeff); return 0; }
    return -coeff * p.e_initial;
  }
};

} // namespace

ModelInstance build_bo(const StorageParams& p, int T, const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::BO);
  c.period_vars(false, false);
  if (opt.e0_variable) {
    LinearForm f;
    f.set(c.e0, 1);
    c.m.add(make_ge(f, p.E_min, lab("bso-b-lo", 0)));
    c.m.add(make_le(f, p.E_max, lab("bso-b-up", 0)));
  }
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      LinearForm f;
      f.set(c.e[t], 1);
      c.m.add(make_ge(f, p.E_min, lab("bso-b-lo", t)));
      c.m.add(make_le(f, p.E_max, lab("bso-b-up", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.add(c.dl[t], -p.P_C_max);
      c.m.add(make_le(std::move(f), 0, lab("bso-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.add(c.dl[t], p.P_D_max);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bso-d", t)));
    }
  }
  return std::move(c.m);
}

ModelInstance build_to(const StorageParams& p, int T, const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::TO);
  c.period_vars(false, false);
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // e_{t-1} >= E_min + (1/etaD) pd dt
      LinearForm f;
      f.add(c.pd[t], c.dt_over_etaD);
      Rat shift = c.prev_e(f, t, Rat(-1));
      c.m.add(make_le(std::move(f), -p.E_min + shift, lab("chso-b", t)));
    }
    {
      // e_{t-1} <= E_max - etaC pc dt
      LinearForm f;
      f.add(c.pc[t], c.etaC_dt);
      Rat shift = c.prev_e(f, t, Rat(1));
      c.m.add(make_le(std::move(f), p.E_max + shift, lab("chso-a", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.add(c.dl[t], -p.P_C_max);
      c.m.add(make_le(std::move(f), 0, lab("bso-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.add(c.dl[t], p.P_D_max);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bso-d", t)));
    }
  }
  return std::move(c.m);
}

ModelInstance build_bor(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::BOR);
  c.period_vars(true, true);
  if (opt.e0_variable) {
    LinearForm f;
    f.set(c.e0, 1);
    c.m.add(make_ge(f, p.E_min, lab("bolr-a", 0)));
    c.m.add(make_le(f, p.E_max, lab("bolr-b", 0)));
  }
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // e_t >= E_min + etaC rcp dt + (1/etaD) rdp dt
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.rcp[t], -c.etaC_dt);
      f.add(c.rdp[t], -c.dt_over_etaD);
      c.m.add(make_ge(std::move(f), p.E_min, lab("bolr-a", t)));
    }
    {
      // e_t <= E_max - etaC rcm dt - (1/etaD) rdm dt
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.rcm[t], c.etaC_dt);
      f.add(c.rdm[t], c.dt_over_etaD);
      c.m.add(make_le(std::move(f), p.E_max, lab("bolr-b", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -p.P_C_max);
      c.m.add(make_le(std::move(f), 0, lab("bolr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.P_D_max);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bolr-d", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcp[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdm[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.rdn[t], 1);
      f.set(c.rcm[t], -1);
      f.set(c.rdm[t], -1);
      c.m.add(make_eq(std::move(f), 0, lab("bolr-g", t)));
      LinearForm g;
      g.set(c.rdn[t], 1);
      c.m.add(make_le(std::move(g), p.R_down, lab("bolr-g-cap", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      f.set(c.rcp[t], -1);
      f.set(c.rdp[t], -1);
      c.m.add(make_eq(std::move(f), 0, lab("bolr-h", t)));
      LinearForm g;
      g.set(c.rup[t], 1);
      c.m.add(make_le(std::move(g), p.R_up, lab("bolr-h-cap", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      c.m.add(make_ge(std::move(f), rp.up_at(t), "min-r+[t=" + std::to_string(t) + "]"));
      LinearForm g;
      g.set(c.rdn[t], 1);
      c.m.add(make_ge(std::move(g), rp.down_at(t), "min-r-[t=" + std::to_string(t) + "]"));
    }
  }
  return std::move(c.m);
}

ModelInstance build_tor(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::TOR);
  c.period_vars(true, true);
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // e_{t-1} >= E_min + (1/etaD) pd dt + (1/etaD) rdp dt
      LinearForm f;
      f.add(c.pd[t], c.dt_over_etaD);
      f.add(c.rdp[t], c.dt_over_etaD);
      Rat shift = c.prev_e(f, t, Rat(-1));
      c.m.add(make_le(std::move(f), -p.E_min + shift, lab("tolr-a", t)));
    }
    {
      // e_{t-1} <= E_max - etaC pc dt - etaC rcm dt
      LinearForm f;
      f.add(c.pc[t], c.etaC_dt);
      f.add(c.rcm[t], c.etaC_dt);
      Rat shift = c.prev_e(f, t, Rat(1));
      c.m.add(make_le(std::move(f), p.E_max + shift, lab("tolr-b", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -p.P_C_max);
      c.m.add(make_le(std::move(f), 0, lab("bolr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.P_D_max);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bolr-d", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcp[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdm[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -p.R_down);
      c.m.add(make_le(std::move(f), 0, lab("tolr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.rdm[t], 1);
      f.add(c.dl[t], p.R_down);
      c.m.add(make_le(std::move(f), p.R_down, lab("tolr-d", t)));
    }
    {
      LinearForm f;
      f.set(c.rcp[t], 1);
      f.add(c.dl[t], -p.R_up);
      c.m.add(make_le(std::move(f), 0, lab("tolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.R_up);
      c.m.add(make_le(std::move(f), p.R_up, lab("tolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.rdn[t], 1);
      f.set(c.rcm[t], -1);
      f.set(c.rdm[t], -1);
      c.m.add(make_eq(std::move(f), 0, lab("tolr-g", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      f.set(c.rcp[t], -1);
      f.set(c.rdp[t], -1);
      c.m.add(make_eq(std::move(f), 0, lab("tolr-h", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      c.m.add(make_ge(std::move(f), rp.up_at(t), "min-r+[t=" + std::to_string(t) + "]"));
      LinearForm g;
      g.set(c.rdn[t], 1);
      c.m.add(make_ge(std::move(g), rp.down_at(t), "min-r-[t=" + std::to_string(t) + "]"));
    }
  }
  return std::move(c.m);
}

ModelInstance build_bir(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::BIR);
  c.period_vars(true, false);
  c.invest_vars();
  if (opt.e0_variable) {
    LinearForm f;
    f.set(c.e0, 1);
    f.add(c.ebar, -p.theta);
    c.m.add(make_ge(std::move(f), p.theta * p.E0_installed, lab("bgiolr-a", 0)));
    LinearForm g;
    g.set(c.e0, 1);
    g.add(c.ebar, Rat(-1));
    c.m.add(make_le(std::move(g), p.E0_installed, lab("bgiolr-b", 0)));
  }
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // e_t >= theta (E0 + ebar) + etaC rcp dt + (1/etaD) rdp dt
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.ebar, -p.theta);
      f.add(c.rcp[t], -c.etaC_dt);
      f.add(c.rdp[t], -c.dt_over_etaD);
      c.m.add(make_ge(std::move(f), p.theta * p.E0_installed, lab("bgiolr-a", t)));
    }
    {
      // e_t <= E0 + ebar - etaC rcm dt - (1/etaD) rdm dt
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.ebar, Rat(-1));
      f.add(c.rcm[t], c.etaC_dt);
      f.add(c.rdm[t], c.dt_over_etaD);
      c.m.add(make_le(std::move(f), p.E0_installed, lab("bgiolr-b", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -(p.PC0_installed + p.C_max));
      c.m.add(make_le(std::move(f), 0, lab("bgiolr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.cbar, Rat(-1));
      c.m.add(make_le(std::move(f), p.PC0_installed, lab("bgiolr-d", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.PD0_installed + p.D_max);
      c.m.add(make_le(std::move(f), p.PD0_installed + p.D_max, lab("bgiolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dbar, Rat(-1));
      c.m.add(make_le(std::move(f), p.PD0_installed, lab("bgiolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcp[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdm[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.rcp[t], 1);
      f.set(c.rdp[t], 1);
      c.m.add(make_ge(std::move(f), rp.up_at(t), "min-r+[t=" + std::to_string(t) + "]"));
      LinearForm g;
      g.set(c.rcm[t], 1);
      g.set(c.rdm[t], 1);
      c.m.add(make_ge(std::move(g), rp.down_at(t), "min-r-[t=" + std::to_string(t) + "]"));
    }
  }
  {
    LinearForm f;
    f.set(c.cbar, 1);
    c.m.add(make_le(std::move(f), p.C_max, "eq:bgiolr-i"));
    LinearForm g;
    g.set(c.dbar, 1);
    c.m.add(make_le(std::move(g), p.D_max, "eq:bgiolr-j"));
    LinearForm h;
    h.set(c.ebar, 1);
    c.m.add(make_le(std::move(h), p.E_invest_max, "eq:bgiolr-k"));
  }
  return std::move(c.m);
}

ModelInstance build_tir(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::TIR);
  c.period_vars(true, false);
  c.invest_vars();
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // e_{t-1} >= theta (E0 + ebar) + (1/etaD) pd dt + (1/etaD) rdp dt
      LinearForm f;
      f.add(c.ebar, p.theta);
      f.add(c.pd[t], c.dt_over_etaD);
      f.add(c.rdp[t], c.dt_over_etaD);
      Rat shift = c.prev_e(f, t, Rat(-1));
      c.m.add(make_le(std::move(f), -p.theta * p.E0_installed + shift, lab("tgiolr-a", t)));
    }
    {
      // e_{t-1} <= E0 + ebar - etaC pc dt - etaC rcm dt
      LinearForm f;
      f.add(c.ebar, Rat(-1));
      f.add(c.pc[t], c.etaC_dt);
      f.add(c.rcm[t], c.etaC_dt);
      Rat shift = c.prev_e(f, t, Rat(1));
      c.m.add(make_le(std::move(f), p.E0_installed + shift, lab("tgiolr-b", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -(p.PC0_installed + p.C_max));
      c.m.add(make_le(std::move(f), 0, lab("bgiolr-c", t)));
    }
    {
      // pc + rcm <= PC0 delta + cbar
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcm[t], 1);
      f.add(c.dl[t], -p.PC0_installed);
      f.add(c.cbar, Rat(-1));
      c.m.add(make_le(std::move(f), 0, lab("tgiolr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.PD0_installed + p.D_max);
      c.m.add(make_le(std::move(f), p.PD0_installed + p.D_max, lab("bgiolr-e", t)));
    }
    {
      // pd + rdp <= PD0 (1-delta) + dbar
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdp[t], 1);
      f.add(c.dl[t], p.PD0_installed);
      f.add(c.dbar, Rat(-1));
      c.m.add(make_le(std::move(f), p.PD0_installed, lab("tgiolr-d", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.rcp[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.set(c.rdm[t], -1);
      c.m.add(make_ge(std::move(f), 0, lab("bolr-f", t)));
    }
    {
      // etaC pc dt <= (1-theta)(E0 delta + ebar)
      LinearForm f;
      f.add(c.pc[t], c.etaC_dt);
      f.add(c.dl[t], -(1 - p.theta) * p.E0_installed);
      f.add(c.ebar, -(1 - p.theta));
      c.m.add(make_le(std::move(f), 0, lab("tgiolr-e", t)));
    }
    {
      // (1/etaD) pd dt <= (1-theta)(E0 delta + ebar)
      LinearForm f;
      f.add(c.pd[t], c.dt_over_etaD);
      f.add(c.dl[t], -(1 - p.theta) * p.E0_installed);
      f.add(c.ebar, -(1 - p.theta));
      c.m.add(make_le(std::move(f), 0, lab("tgiolr-f", t)));
    }
    {
      LinearForm f;
      f.set(c.rcp[t], 1);
      f.set(c.rdp[t], 1);
      c.m.add(make_ge(std::move(f), rp.up_at(t), "min-r+[t=" + std::to_string(t) + "]"));
      LinearForm g;
      g.set(c.rcm[t], 1);
      g.set(c.rdm[t], 1);
      c.m.add(make_ge(std::move(g), rp.down_at(t), "min-r-[t=" + std::to_string(t) + "]"));
    }
  }
  {
    LinearForm f;
    f.set(c.cbar, 1);
    c.m.add(make_le(std::move(f), p.C_max, "eq:bgiolr-i"));
    LinearForm g;
    g.set(c.dbar, 1);
    c.m.add(make_le(std::move(g), p.D_max, "eq:bgiolr-j"));
    LinearForm h;
    h.set(c.ebar, 1);
    c.m.add(make_le(std::move(h), p.E_invest_max, "eq:bgiolr-k"));
  }
  return std::move(c.m);
}

ModelInstance build_bof(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt) {
  Ctx c(p, T, opt, Family::BOF);
  c.period_vars(false, true);
  if (opt.e0_variable) {
    LinearForm f;
    f.set(c.e0, 1);
    c.m.add(make_ge(f, p.E_min, lab("bofr-a-lo", 0)));
    c.m.add(make_le(f, p.E_max, lab("bofr-a-up", 0)));
  }
  for (int t = 1; t <= T; ++t) {
    c.balance(t);
    {
      // E_min + (1/etaD) rup dt <= e_t
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.rup[t], -c.dt_over_etaD);
      c.m.add(make_ge(std::move(f), p.E_min, lab("bofr-a-lo", t)));
    }
    {
      // e_t <= E_max - etaC rdn dt
      LinearForm f;
      f.set(c.e[t], 1);
      f.add(c.rdn[t], c.etaC_dt);
      c.m.add(make_le(std::move(f), p.E_max, lab("bofr-a-up", t)));
    }
    {
      LinearForm f;
      f.set(c.pc[t], 1);
      f.add(c.dl[t], -p.P_C_max);
      c.m.add(make_le(std::move(f), 0, lab("bso-c", t)));
    }
    {
      LinearForm f;
      f.set(c.pd[t], 1);
      f.add(c.dl[t], p.P_D_max);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bso-d", t)));
    }
    {
      // pc - pd + rdn <= P_C_max
      LinearForm f;
      f.set(c.pc[t], 1);
      f.set(c.pd[t], -1);
      f.set(c.rdn[t], 1);
      c.m.add(make_le(std::move(f), p.P_C_max, lab("bofr-b", t)));
    }
    {
      // -pc + pd + rup <= P_D_max
      LinearForm f;
      f.set(c.pc[t], -1);
      f.set(c.pd[t], 1);
      f.set(c.rup[t], 1);
      c.m.add(make_le(std::move(f), p.P_D_max, lab("bofr-c", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      c.m.add(make_le(std::move(f), p.R_up, lab("bofr-d", t)));
      LinearForm g;
      g.set(c.rdn[t], 1);
      c.m.add(make_le(std::move(g), p.R_down, lab("bofr-e", t)));
    }
    {
      LinearForm f;
      f.set(c.rup[t], 1);
      c.m.add(make_ge(std::move(f), rp.up_at(t), "min-r+[t=" + std::to_string(t) + "]"));
      LinearForm g;
      g.set(c.rdn[t], 1);
      c.m.add(make_ge(std::move(g), rp.down_at(t), "min-r-[t=" + std::to_string(t) + "]"));
    }
  }
  return std::move(c.m);
}

ModelInstance build_family(Family f, const StorageParams& p, int T,
                           const ReserveProfile& rp, const BuildOptions& opt) {
  switch (f) {
    case Family::BO: return build_bo(p, T, opt);
    case Family::TO: return build_to(p, T, opt);
    case Family::BOR: return build_bor(p, T, rp, opt);
    case Family::TOR: return build_tor(p, T, rp, opt);
    case Family::BIR: return build_bir(p, T, rp, opt);
    case Family::TIR: return build_tir(p, T, rp, opt);
    case Family::BOF: return build_bof(p, T, rp, opt);
  }
  throw std::logic_error("unreachable");
}

} // namespace tsf
