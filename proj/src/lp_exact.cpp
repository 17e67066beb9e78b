#include "tsf/lp_exact.hpp"

#include <cassert>

namespace tsf {
namespace {

// Dense two-phase simplex on the standard form
//   min c'z  s.t.  Az = b, z >= 0
// built from free variables (split u-w), slacks for LE rows, and one
// artificial per row. Pricing is Dantzig with an automatic switch to Bland
// after a degeneracy streak; both tie-break on lowest column index, so the
// pivot sequence is deterministic.
struct Tableau {
  int m = 0, C = 0;
  std::vector<std::vector<Rat>> T; // m x (C+1), last column is rhs
  std::vector<int> basis;
  std::vector<Rat> red;  // reduced costs, size C
  Rat obj = 0;           // current objective value
  std::vector<char> barred;
  int degen_streak = 0;
  bool bland = false;

  // red_j = c_j - sum_i c_B[i] * T[i][j]; obj = c_B' * rhs
  void set_costs(const std::vector<Rat>& cost) {
    red = cost;
    obj = 0;
    for (int i = 0; i < m; ++i) {
      const Rat& cb = cost[size_t(basis[i])];
      if (cb == 0) continue;
      const auto& row = T[size_t(i)];
      for (int j = 0; j < C; ++j)
        if (row[size_t(j)] != 0) red[size_t(j)] -= cb * row[size_t(j)];
      obj += cb * row[size_t(C)];
    }
  }

  void pivot(int pr, int pc) {
    auto& prow = T[size_t(pr)];
    Rat piv = prow[size_t(pc)];
    for (auto& v : prow) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      auto& row = T[size_t(i)];
      Rat f = row[size_t(pc)];
      if (f == 0) continue;
      for (int j = 0; j <= C; ++j)
        if (prow[size_t(j)] != 0) row[size_t(j)] -= f * prow[size_t(j)];
    }
    Rat f = red[size_t(pc)];
    if (f != 0) {
      for (int j = 0; j < C; ++j)
        if (prow[size_t(j)] != 0) red[size_t(j)] -= f * prow[size_t(j)];
      obj += f * prow[size_t(C)];
    }
    basis[size_t(pr)] = pc;
  }

  int entering() const {
    if (bland) {
      for (int j = 0; j < C; ++j)
        if (!barred[size_t(j)] && red[size_t(j)] < 0) return j;
      return -1;
    }
    int best = -1;
    for (int j = 0; j < C; ++j)
      if (!barred[size_t(j)] && red[size_t(j)] < 0 &&
          (best < 0 || red[size_t(j)] < red[size_t(best)]))
        best = j;
    return best;
  }

  // Leaving row for entering column pc; -1 means unbounded.
  int leaving(int pc) const {
    int arg = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      const Rat& a = T[size_t(i)][size_t(pc)];
      if (a <= 0) continue;
      Rat ratio = T[size_t(i)][size_t(C)] / a;
      if (arg < 0 || ratio < best ||
          (ratio == best && basis[size_t(i)] < basis[size_t(arg)])) {
        arg = i;
        best = ratio;
      }
    }
    return arg;
  }

  // Returns true on optimal, false on unbounded (ray via last entering col).
  bool run(int* unbounded_col) {
    while (true) {
      int pc = entering();
      if (pc < 0) return true;
      int pr = leaving(pc);
      if (pr < 0) {
        if (unbounded_col) *unbounded_col = pc;
        return false;
      }
      if (T[size_t(pr)][size_t(C)] == 0) {
        if (++degen_streak > 3 * m + 10) bland = true;
      } else {
        degen_streak = 0;
        bland = false;
      }
      pivot(pr, pc);
    }
  }
};

struct Problem {
  const Polyhedron& P;
  int n, m;
  std::vector<char> flip;      // row multiplied by -1 to make rhs >= 0
  std::vector<int> slack_col;  // -1 for EQ rows
  std::vector<int> art_col;
  int cols = 0;
  Tableau tab;

  explicit Problem(const Polyhedron& poly) : P(poly) {
    n = int(P.vars.size());
    m = int(P.rows.size());
    flip.assign(size_t(m), 0);
    slack_col.assign(size_t(m), -1);
    art_col.assign(size_t(m), -1);
    int next = 2 * n;
    for (int i = 0; i < m; ++i)
      if (P.rows[size_t(i)].sense == Sense::LE) slack_col[size_t(i)] = next++;
    for (int i = 0; i < m; ++i) art_col[size_t(i)] = next++;
    cols = next;

    tab.m = m;
    tab.C = cols;
    tab.T.assign(size_t(m), std::vector<Rat>(size_t(cols + 1), Rat(0)));
    tab.basis.resize(size_t(m));
    tab.barred.assign(size_t(cols), 0);
    for (int i = 0; i < m; ++i) {
      const auto& row = P.rows[size_t(i)];
      Rat rhs = row.rhs - row.form.constant;
      bool neg = rhs < 0;
      flip[size_t(i)] = neg;
      Rat sgn = neg ? Rat(-1) : Rat(1);
      auto& tr = tab.T[size_t(i)];
      for (auto& [v, c] : row.form.coeffs) {
        tr[size_t(2 * v)] = sgn * c;
        tr[size_t(2 * v + 1)] = -sgn * c;
      }
      if (slack_col[size_t(i)] >= 0) tr[size_t(slack_col[size_t(i)])] = sgn;
      tr[size_t(art_col[size_t(i)])] = 1;
      tr[size_t(cols)] = sgn * rhs;
      tab.basis[size_t(i)] = art_col[size_t(i)];
    }
  }

  bool is_artificial(int col) const { return col >= cols - m; }

  // Phase 1; returns true if feasible basis found.
  bool phase1() {
    std::vector<Rat> cost(size_t(cols), Rat(0));
    for (int i = 0; i < m; ++i) cost[size_t(art_col[size_t(i)])] = 1;
    tab.set_costs(cost);
    tab.bland = false;
    tab.run(nullptr); // phase 1 objective bounded below by 0
    if (tab.obj != 0) return false;
    // Drive basic artificials out wherever the row has a live real entry.
    for (int i = 0; i < m; ++i) {
      if (!is_artificial(tab.basis[size_t(i)])) continue;
      for (int j = 0; j < cols - m; ++j) {
        if (tab.T[size_t(i)][size_t(j)] != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (int j = cols - m; j < cols; ++j) tab.barred[size_t(j)] = 1;
    return true;
  }

  std::vector<Rat> primal_x() const {
    std::vector<Rat> z(size_t(cols), Rat(0));
    for (int i = 0; i < m; ++i)
      z[size_t(tab.basis[size_t(i)])] = tab.T[size_t(i)][size_t(cols)];
    std::vector<Rat> x(size_t(n), Rat(0));
    for (int v = 0; v < n; ++v)
      x[size_t(v)] = z[size_t(2 * v)] - z[size_t(2 * v + 1)];
    return x;
  }

  // Row multipliers for the CURRENT cost row, in original row space.
  std::vector<Rat> duals() const {
    std::vector<Rat> y(size_t(m), Rat(0));
    for (int i = 0; i < m; ++i) {
      // reduced cost of artificial i equals c_art - y_hat_i
      Rat c_art = 0; // phase-2 costs keep artificials at 0
      Rat y_hat = c_art - tab.red[size_t(art_col[size_t(i)])];
      y[size_t(i)] = flip[size_t(i)] ? Rat(-y_hat) : y_hat;
    }
    return y;
  }

  std::vector<Rat> ray_x(int col) const {
    std::vector<Rat> dz(size_t(cols), Rat(0));
    dz[size_t(col)] = 1;
    for (int i = 0; i < m; ++i)
      dz[size_t(tab.basis[size_t(i)])] = -tab.T[size_t(i)][size_t(col)];
    std::vector<Rat> d(size_t(n), Rat(0));
    for (int v = 0; v < n; ++v)
      d[size_t(v)] = dz[size_t(2 * v)] - dz[size_t(2 * v + 1)];
    return d;
  }
};

void verify_optimal(const Polyhedron& P, const LinearForm& c,
                    const LPResult& r) {
  // primal feasibility
  for (auto& row : P.rows)
    if (row.violation(r.x) != 0)
      throw std::logic_error("lp_exact: primal certificate failed");
  // dual feasibility A'y = c, y <= 0 on LE rows, and strong duality
  std::map<int, Rat> aty;
  Rat yb = 0;
  for (size_t i = 0; i < P.rows.size(); ++i) {
    const Rat& yi = r.y[i];
    if (yi == 0) continue;
    const auto& row = P.rows[i];
    if (row.sense == Sense::LE && yi > 0)
      throw std::logic_error("lp_exact: dual sign certificate failed");
    for (auto& [v, cf] : row.form.coeffs) {
      auto [it, fresh] = aty.try_emplace(v, Rat(0));
      it->second += yi * cf;
    }
    yb += yi * (row.rhs - row.form.constant);
  }
  for (auto& [v, cf] : c.coeffs)
    if (aty.count(v) ? aty[v] != cf : cf != 0)
      throw std::logic_error("lp_exact: dual equation certificate failed");
  for (auto& [v, s] : aty)
    if (c.coeff(v) != s) throw std::logic_error("lp_exact: dual equation certificate failed");
  Rat primal = c.eval(r.x);
  if (yb + c.constant != primal)
    throw std::logic_error("lp_exact: strong duality certificate failed");
}

void verify_farkas(const Polyhedron& P, const std::vector<Rat>& lam) {
  std::map<int, Rat> combo;
  Rat rhs = 0;
  for (size_t i = 0; i < P.rows.size(); ++i) {
    const Rat& li = lam[i];
    if (li == 0) continue;
    const auto& row = P.rows[i];
    if (row.sense == Sense::LE && li < 0)
      throw std::logic_error("lp_exact: farkas sign failed");
    for (auto& [v, cf] : row.form.coeffs) {
      auto [it, fresh] = combo.try_emplace(v, Rat(0));
      it->second += li * cf;
    }
    rhs += li * (row.rhs - row.form.constant);
  }
  for (auto& [v, s] : combo)
    if (s != 0) throw std::logic_error("lp_exact: farkas combination failed");
  if (rhs >= 0) throw std::logic_error("lp_exact: farkas rhs failed");
}

} // namespace

LPResult lp_solve_rows(const Polyhedron& P, const LinearForm& objective,
                       bool maximize) {
  LinearForm c = objective;
  if (maximize) c *= Rat(-1);

  Problem prob(P);
  LPResult out;
  if (!prob.phase1()) {
    out.status = LPStatus::Infeasible;
    // lam = -y_hat in original row space; phase-1 duals read via artificials
    std::vector<Rat> lam(size_t(prob.m), Rat(0));
    for (int i = 0; i < prob.m; ++i) {
      Rat y_hat = Rat(1) - prob.tab.red[size_t(prob.art_col[size_t(i)])];
      Rat mu = prob.flip[size_t(i)] ? Rat(-y_hat) : y_hat;
      lam[size_t(i)] = -mu;
    }
    verify_farkas(P, lam);
    out.farkas = std::move(lam);
    return out;
  }

  std::vector<Rat> cost(size_t(prob.cols), Rat(0));
  for (auto& [v, cf] : c.coeffs) {
    cost[size_t(2 * v)] = cf;
    cost[size_t(2 * v + 1)] = -cf;
  }
  prob.tab.set_costs(cost);
  prob.tab.bland = false;
  prob.tab.degen_streak = 0;
  int ray_col = -1;
  if (!prob.tab.run(&ray_col)) {
    out.status = LPStatus::Unbounded;
    out.x = prob.primal_x();
    // Reuse the y slot for the improving ray. The tableau minimizes the
    // (possibly negated) costs, so its ray already improves the caller's
    // sense; no sign fix is needed for maximize.
    out.y = prob.ray_x(ray_col);
    return out;
  }

  out.status = LPStatus::Optimal;
  out.x = prob.primal_x();
  out.y = prob.duals();
  out.objective = c.eval(out.x);
  LPResult check = out;
  verify_optimal(P, c, check);
  if (maximize) {
    out.objective = -out.objective;
    for (auto& v : out.y) v = -v;
  }
  return out;
}

RowCheck check_row_implied(const Polyhedron& P, const LinearConstraint& row) {
  if (row.sense != Sense::LE)
    throw std::logic_error("check_row_implied expects a LE row");
  RowCheck rc;
  LinearForm a = row.form;
  LPResult r = lp_solve_rows(P, a, /*maximize=*/true);
  if (r.status == LPStatus::Infeasible) {
    // empty polyhedron implies everything; certificate is the farkas vector
    rc.implied = true;
    rc.excess = 0;
    rc.multipliers = r.farkas;
    return rc;
  }
  if (r.status == LPStatus::Unbounded) {
    // walk far enough along the ray to exceed rhs
    const std::vector<Rat>& ray = r.y;
    Rat at = a.eval(r.x);
    Rat rate = 0;
    for (auto& [v, cf] : a.coeffs) rate += cf * ray[size_t(v)];
    assert(rate > 0);
    Rat t = (row.rhs - at) / rate + 1;
    if (t < 1) t = 1;
    rc.implied = false;
    rc.point = r.x;
    for (size_t v = 0; v < rc.point.size(); ++v) rc.point[v] += t * ray[v];
    rc.excess = a.eval(rc.point) - row.rhs;
    return rc;
  }
  rc.excess = r.objective - row.rhs;
  rc.point = r.x;
  if (rc.excess <= 0) {
    rc.implied = true;
    // max a'x = b'y with A'y = a, y >= 0 on LE rows (maximize convention)
    rc.multipliers = r.y;
  }
  return rc;
}

} // namespace tsf
