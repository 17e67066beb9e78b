#include "tsf/float_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

// Bounded-variable revised simplex in doubles (dual simplex from an all-slack
// basis, primal simplex for cleanup after bound relaxations), with a sparse
// left-looking LU and product-form eta updates. Any basis the double run
// terminates with can be re-derived in exact rationals: the same LU algebra
// over mpq recomputes the basic solution, checks feasibility and reduced-cost
// signs with zero tolerance, and runs Bland-rule cleanup pivots when the
// double run stopped short of true optimality.

namespace tsf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasTol = 1e-7;   // primal feasibility in doubles
constexpr double kDualTol = 1e-9;   // reduced-cost sign tolerance
constexpr double kPivTol = 1e-8;    // smallest admissible pivot
constexpr int kRefactorEvery = 64;
constexpr long kMaxIter = 2000000;

enum VStat : uint8_t { AtLower, AtUpper, FreeAtZero, Basic };

template <class T> bool is_zero(const T& v) { return v == 0; }
template <> bool is_zero<double>(const double& v) { return std::fabs(v) < 1e-12; }

// Left-looking sparse LU with partial pivoting. Columns are fed in a caller
// chosen order; pivot row per column is the largest surviving entry. L keeps
// original row indices; U lives in pivot-step space.
template <class T>
struct SparseLU {
  int m = 0;
  std::vector<int> pivrow;    // step -> original row
  std::vector<int> rowstep;   // original row -> step, -1 while unpivoted
  std::vector<int> stepslot;  // step -> basis slot whose column was processed
  std::vector<int> slotstep;  // basis slot -> step
  std::vector<std::vector<std::pair<int, T>>> Lcol;  // (orig row, multiplier)
  std::vector<std::vector<std::pair<int, T>>> Ucol;  // (earlier step, value)
  std::vector<T> diag;

  // columns[slot] = sparse column of the basis matrix, original row space.
  bool factor(const std::vector<std::vector<std::pair<int, T>>>& columns) {
    m = int(columns.size());
    pivrow.assign(size_t(m), -1);
    rowstep.assign(size_t(m), -1);
    stepslot.assign(size_t(m), -1);
    slotstep.assign(size_t(m), -1);
    Lcol.assign(size_t(m), {});
    Ucol.assign(size_t(m), {});
    diag.assign(size_t(m), T(0));

    std::vector<int> order(size_t(m), 0);
    for (int i = 0; i < m; ++i) order[size_t(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return columns[size_t(a)].size() < columns[size_t(b)].size();
    });

    std::vector<T> w(size_t(m), T(0));
    std::vector<int> touched;
    touched.reserve(size_t(m));
    for (int t = 0; t < m; ++t) {
      int slot = order[size_t(t)];
      for (auto& [i, v] : columns[size_t(slot)]) {
        w[size_t(i)] = v;
        touched.push_back(i);
      }
      // eliminate with existing pivots, in pivot order
      for (int s = 0; s < t; ++s) {
        T& ws = w[size_t(pivrow[size_t(s)])];
        if (is_zero(ws)) continue;
        T mult = ws;
        Ucol[size_t(t)].emplace_back(s, mult);
        ws = T(0);
        for (auto& [i, l] : Lcol[size_t(s)]) {
          if (is_zero(w[size_t(i)])) touched.push_back(i);
          w[size_t(i)] -= mult * l;
        }
      }
      // pivot: remaining entry of largest magnitude
      int pr = -1;
      double best = 0;
      for (int i : touched) {
        if (rowstep[size_t(i)] >= 0 || is_zero(w[size_t(i)])) continue;
        double mag = std::fabs(double_of(w[size_t(i)]));
        if (pr < 0 || mag > best) {
          pr = i;
          best = mag;
        }
      }
      if (pr < 0) return false;  // structurally singular basis
      diag[size_t(t)] = w[size_t(pr)];
      pivrow[size_t(t)] = pr;
      rowstep[size_t(pr)] = t;
      stepslot[size_t(t)] = slot;
      slotstep[size_t(slot)] = t;
      for (int i : touched) {
        if (i == pr || rowstep[size_t(i)] >= 0) {
          if (i != pr) w[size_t(i)] = T(0); // already recorded in U
          continue;
        }
        if (!is_zero(w[size_t(i)])) Lcol[size_t(t)].emplace_back(i, w[size_t(i)] / diag[size_t(t)]);
        w[size_t(i)] = T(0);
      }
      w[size_t(pr)] = T(0);
      touched.clear();
    }
    return true;
  }

  static double double_of(const T& v);

  // Solve B z = rhs; rhs given in original row space, result by basis slot.
  void ftran(std::vector<T>& x) const {
    std::vector<T> y(size_t(m), T(0));
    for (int t = 0; t < m; ++t) {
      T yt = x[size_t(pivrow[size_t(t)])];
      y[size_t(t)] = yt;
      if (is_zero(yt)) continue;
      for (auto& [i, l] : Lcol[size_t(t)]) x[size_t(i)] -= yt * l;
    }
    for (int t = m - 1; t >= 0; --t) {
      T zt = y[size_t(t)] / diag[size_t(t)];
      y[size_t(t)] = zt;
      if (is_zero(zt)) continue;
      for (auto& [s, u] : Ucol[size_t(t)]) y[size_t(s)] -= zt * u;
    }
    for (int t = 0; t < m; ++t) x[size_t(stepslot[size_t(t)])] = y[size_t(t)];
  }

  // Solve B' w = c; c given by basis slot, result in original row space.
  void btran(std::vector<T>& x) const {
    std::vector<T> v(size_t(m), T(0));
    for (int t = 0; t < m; ++t) {
      T acc = x[size_t(stepslot[size_t(t)])];
      for (auto& [s, u] : Ucol[size_t(t)]) acc -= u * v[size_t(s)];
      v[size_t(t)] = acc / diag[size_t(t)];
    }
    std::fill(x.begin(), x.end(), T(0));
    for (int t = m - 1; t >= 0; --t) {
      T acc = v[size_t(t)];
      for (auto& [i, l] : Lcol[size_t(t)]) acc -= l * x[size_t(i)];
      x[size_t(pivrow[size_t(t)])] = acc;
    }
  }
};

template <> double SparseLU<double>::double_of(const double& v) { return v; }
template <> double SparseLU<Rat>::double_of(const Rat& v) { return v.get_d(); }

// Product-form eta: replacing basis slot p, w = old-basis FTRAN of the
// entering column.
template <class T>
struct Eta {
  int p;
  std::vector<std::pair<int, T>> w;  // sparse, by slot; includes (p, w_p)
  T wp;
};

template <class T>
void eta_ftran(const Eta<T>& e, std::vector<T>& y) {
  T yp = y[size_t(e.p)] / e.wp;
  for (auto& [i, wi] : e.w)
    if (i != e.p) y[size_t(i)] -= wi * yp;
  y[size_t(e.p)] = yp;
}

// Shared problem arrays: structural columns then one slack per row.
struct Arrays {
  int nrows = 0, nstruct = 0, ncols = 0;
  std::vector<std::vector<std::pair<int, double>>> col;  // (row, val)
  std::vector<double> lo, up, cost, b;
  // exact mirrors (same layout)
  std::vector<std::vector<std::pair<int, Rat>>> xcol;
  std::vector<Rat> xlo, xup, xcost, xb;
  std::vector<uint8_t> haslo, hasup;
  Rat obj_const = 0;   // objective constant, user sense
  bool user_minimize = true;
};

Arrays build_arrays(const ModelInstance& m) {
  if (m.has_binaries()) throw std::logic_error("float lp: relax the model first");
  Arrays A;
  A.user_minimize = m.minimize;
  A.nrows = int(m.constraints.size());
  A.nstruct = int(m.variables.size());
  A.ncols = A.nstruct + A.nrows;
  A.col.resize(size_t(A.ncols));
  A.xcol.resize(size_t(A.ncols));
  A.lo.assign(size_t(A.ncols), 0);
  A.up.assign(size_t(A.ncols), 0);
  A.cost.assign(size_t(A.ncols), 0);
  A.xlo.assign(size_t(A.ncols), Rat(0));
  A.xup.assign(size_t(A.ncols), Rat(0));
  A.xcost.assign(size_t(A.ncols), Rat(0));
  A.haslo.assign(size_t(A.ncols), 0);
  A.hasup.assign(size_t(A.ncols), 0);
  A.b.assign(size_t(A.nrows), 0);
  A.xb.assign(size_t(A.nrows), Rat(0));

  for (int j = 0; j < A.nstruct; ++j) {
    const Variable& v = m.variables[size_t(j)];
    A.haslo[size_t(j)] = v.has_lb;
    A.hasup[size_t(j)] = v.has_ub;
    A.lo[size_t(j)] = v.has_lb ? v.lb.get_d() : -kInf;
    A.up[size_t(j)] = v.has_ub ? v.ub.get_d() : kInf;
    if (v.has_lb) A.xlo[size_t(j)] = v.lb;
    if (v.has_ub) A.xup[size_t(j)] = v.ub;
  }
  for (int r = 0; r < A.nrows; ++r) {
    const LinearConstraint& row = m.constraints[size_t(r)];
    for (auto& [j, cval] : row.form.coeffs) {
      A.col[size_t(j)].emplace_back(r, cval.get_d());
      A.xcol[size_t(j)].emplace_back(r, cval);
    }
    Rat rhs = row.rhs - row.form.constant;
    A.xb[size_t(r)] = rhs;
    A.b[size_t(r)] = rhs.get_d();
    int sj = A.nstruct + r;
    A.col[size_t(sj)].emplace_back(r, 1.0);
    A.xcol[size_t(sj)].emplace_back(r, Rat(1));
    A.haslo[size_t(sj)] = 1;
    A.xlo[size_t(sj)] = 0;
    A.lo[size_t(sj)] = 0;
    if (row.sense == Sense::EQ) {
      A.hasup[size_t(sj)] = 1;
      A.xup[size_t(sj)] = 0;
      A.up[size_t(sj)] = 0;
    } else {
      A.up[size_t(sj)] = kInf;
    }
  }
  // internal sense: minimize
  A.obj_const = m.objective.constant;
  for (auto& [j, cval] : m.objective.coeffs) {
    Rat c = m.minimize ? cval : -cval;
    A.xcost[size_t(j)] = c;
    A.cost[size_t(j)] = c.get_d();
  }
  return A;
}

// ------------------------- double-precision engine -------------------------

struct Engine {
  Arrays a;
  std::vector<int> basis;    // slot -> col
  std::vector<int> where;    // col -> slot, -1 nonbasic
  std::vector<VStat> stat;   // col
  std::vector<double> xB;    // slot
  SparseLU<double> lu;
  std::vector<Eta<double>> etas;
  long iters = 0;

  explicit Engine(Arrays arrays) : a(std::move(arrays)) {
    basis.resize(size_t(a.nrows));
    where.assign(size_t(a.ncols), -1);
    stat.assign(size_t(a.ncols), AtLower);
    for (int j = 0; j < a.ncols; ++j) stat[size_t(j)] = initial_status(j);
    for (int r = 0; r < a.nrows; ++r) {
      int sj = a.nstruct + r;
      basis[size_t(r)] = sj;
      where[size_t(sj)] = r;
      stat[size_t(sj)] = Basic;
    }
    refactor();
  }

  VStat initial_status(int j) const {
    double c = a.cost[size_t(j)];
    bool lo_ok = a.lo[size_t(j)] > -kInf, up_ok = a.up[size_t(j)] < kInf;
    if (c > kDualTol) {
      if (lo_ok) return AtLower;
      throw std::runtime_error("float lp: variable with improving infinite bound");
    }
    if (c < -kDualTol) {
      if (up_ok) return AtUpper;
      throw std::runtime_error("float lp: variable with improving infinite bound");
    }
    if (lo_ok) return AtLower;
    if (up_ok) return AtUpper;
    return FreeAtZero;
  }

  double nb_value(int j) const {
    switch (stat[size_t(j)]) {
      case AtLower: return a.lo[size_t(j)];
      case AtUpper: return a.up[size_t(j)];
      default: return 0;
    }
  }

  void refactor() {
    std::vector<std::vector<std::pair<int, double>>> cols(size_t(a.nrows));
    for (int r = 0; r < a.nrows; ++r) cols[size_t(r)] = a.col[size_t(basis[size_t(r)])];
    if (!lu.factor(cols)) throw std::runtime_error("float lp: singular basis");
    etas.clear();
    recompute_xB();
  }

  void recompute_xB() {
    std::vector<double> rhs = a.b;
    for (int j = 0; j < a.ncols; ++j) {
      if (where[size_t(j)] >= 0) continue;
      double v = nb_value(j);
      if (v == 0) continue;
      for (auto& [r, av] : a.col[size_t(j)]) rhs[size_t(r)] -= av * v;
    }
    ftran(rhs);
    xB = std::move(rhs);
  }

  void ftran(std::vector<double>& x) const {
    lu.ftran(x);
    for (auto& e : etas) eta_ftran(e, x);
  }

  void btran(std::vector<double>& x) const {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      // E^T u = c  =>  u_p = (c_p - sum_{i != p} w_i c_i) / w_p
      double s = 0;
      for (auto& [i, wi] : it->w)
        if (i != it->p) s += wi * x[size_t(i)];
      x[size_t(it->p)] = (x[size_t(it->p)] - s) / it->wp;
    }
    lu.btran(x);
  }

  std::vector<double> duals() const {
    std::vector<double> c(size_t(a.nrows), 0);
    for (int r = 0; r < a.nrows; ++r) c[size_t(r)] = a.cost[size_t(basis[size_t(r)])];
    btran(c);
    return c;
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = a.cost[size_t(j)];
    for (auto& [r, av] : a.col[size_t(j)]) d -= y[size_t(r)] * av;
    return d;
  }

  double objective() const {
    double v = 0;
    for (int r = 0; r < a.nrows; ++r) v += a.cost[size_t(basis[size_t(r)])] * xB[size_t(r)];
    for (int j = 0; j < a.ncols; ++j)
      if (where[size_t(j)] < 0) v += a.cost[size_t(j)] * nb_value(j);
    return v;
  }

  void push_eta(int slot, std::vector<double>& w) {
    Eta<double> e;
    e.p = slot;
    e.wp = w[size_t(slot)];
    for (int i = 0; i < a.nrows; ++i)
      if (w[size_t(i)] != 0 && std::fabs(w[size_t(i)]) > 1e-13) e.w.emplace_back(i, w[size_t(i)]);
    etas.push_back(std::move(e));
    if (int(etas.size()) >= kRefactorEvery) refactor();
  }

  // One dual simplex pass: drive primal infeasibilities out while keeping
  // reduced costs sign-correct. Returns false when primal infeasible.
  bool dual_loop() {
    for (;;) {
      if (++iters > kMaxIter) throw std::runtime_error("float lp: iteration limit");
      int r = -1;
      double worst = kFeasTol;
      bool below = false;
      for (int i = 0; i < a.nrows; ++i) {
        int j = basis[size_t(i)];
        double v = xB[size_t(i)];
        double lo = a.lo[size_t(j)], up = a.up[size_t(j)];
        if (v < lo - worst) {
          worst = lo - v;
          r = i;
          below = true;
        } else if (v > up + worst) {
          worst = v - up;
          r = i;
          below = false;
        }
      }
      if (r < 0) return true;  // primal feasible

      std::vector<double> rho(size_t(a.nrows), 0);
      rho[size_t(r)] = 1;
      btran(rho);
      std::vector<double> y = duals();

      int q = -1;
      double best_ratio = kInf, best_alpha = 0;
      for (int j = 0; j < a.ncols; ++j) {
        if (where[size_t(j)] >= 0) continue;
        if (a.lo[size_t(j)] == a.up[size_t(j)] && a.haslo[size_t(j)] && a.hasup[size_t(j)])
          continue;  // fixed columns never enter
        double alpha = 0;
        for (auto& [rr, av] : a.col[size_t(j)]) alpha += rho[size_t(rr)] * av;
        if (std::fabs(alpha) < kPivTol) continue;
        bool ok = false;
        if (stat[size_t(j)] == AtLower || stat[size_t(j)] == FreeAtZero)
          ok = below ? (alpha < 0) : (alpha > 0);
        if (!ok && stat[size_t(j)] == AtUpper) ok = below ? (alpha > 0) : (alpha < 0);
        if (!ok && stat[size_t(j)] == FreeAtZero) ok = true;
        if (!ok) continue;
        double ratio = std::fabs(reduced_cost(j, y)) / std::fabs(alpha);
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && std::fabs(alpha) > std::fabs(best_alpha))) {
          best_ratio = ratio;
          best_alpha = alpha;
          q = j;
        }
      }
      if (q < 0) return false;  // no entering column: primal infeasible

      int leave = basis[size_t(r)];
      double target = below ? a.lo[size_t(leave)] : a.up[size_t(leave)];
      std::vector<double> w = a_col_dense(q);
      ftran(w);
      if (std::fabs(w[size_t(r)]) < kPivTol) {
        refactor();
        continue;  // stale eta chain; retry with a fresh factorization
      }
      double t = (xB[size_t(r)] - target) / w[size_t(r)];  // change of entering value
      double enter_from = nb_value(q);
      for (int i = 0; i < a.nrows; ++i)
        if (w[size_t(i)] != 0) xB[size_t(i)] -= w[size_t(i)] * t;
      // slot r now holds the entering variable
      basis[size_t(r)] = q;
      where[size_t(q)] = r;
      stat[size_t(q)] = Basic;
      xB[size_t(r)] = enter_from + t;
      where[size_t(leave)] = -1;
      stat[size_t(leave)] = below ? AtLower : AtUpper;
      push_eta(r, w);
    }
  }

  std::vector<double> a_col_dense(int j) const {
    std::vector<double> w(size_t(a.nrows), 0);
    for (auto& [r, av] : a.col[size_t(j)]) w[size_t(r)] = av;
    return w;
  }

  // One primal simplex pass (phase 2): requires primal feasibility; restores
  // optimality after bound relaxations. Throws on unbounded.
  void primal_loop() {
    long stall = 0;
    for (;;) {
      if (++iters > kMaxIter) throw std::runtime_error("float lp: iteration limit");
      std::vector<double> y = duals();
      int q = -1;
      double best = kDualTol;
      int dir = +1;
      for (int j = 0; j < a.ncols; ++j) {
        if (where[size_t(j)] >= 0) continue;
        if (a.haslo[size_t(j)] && a.hasup[size_t(j)] && a.lo[size_t(j)] == a.up[size_t(j)])
          continue;
        double d = reduced_cost(j, y);
        VStat s = stat[size_t(j)];
        if ((s == AtLower || s == FreeAtZero) && d < -best) {
          best = -d;
          q = j;
          dir = +1;
        } else if ((s == AtUpper || s == FreeAtZero) && d > best) {
          best = d;
          q = j;
          dir = -1;
        }
      }
      if (q < 0) return;  // optimal

      std::vector<double> w = a_col_dense(q);
      ftran(w);
      // ratio test: x_B shifts by -dir * w * t, entering moves dir * t >= 0
      double tmax = kInf;
      int leave_slot = -1;
      bool leave_at_lower = false;
      double span = a.up[size_t(q)] - a.lo[size_t(q)];
      bool flip_possible = a.haslo[size_t(q)] && a.hasup[size_t(q)];
      if (flip_possible) tmax = span;
      for (int i = 0; i < a.nrows; ++i) {
        double wi = w[size_t(i)];
        if (std::fabs(wi) < kPivTol) continue;
        int bj = basis[size_t(i)];
        double move = -double(dir) * wi;  // d x_Bi / d t
        double room;
        bool to_lower;
        if (move < 0) {
          if (a.lo[size_t(bj)] <= -kInf) continue;
          room = (xB[size_t(i)] - a.lo[size_t(bj)]) / -move;
          to_lower = true;
        } else {
          if (a.up[size_t(bj)] >= kInf) continue;
          room = (a.up[size_t(bj)] - xB[size_t(i)]) / move;
          to_lower = false;
        }
        if (room < -1e-12) room = 0;
        if (room < tmax - 1e-12 ||
            (room < tmax + 1e-12 && leave_slot >= 0 &&
             std::fabs(wi) > std::fabs(w[size_t(leave_slot)]))) {
          tmax = room;
          leave_slot = i;
          leave_at_lower = to_lower;
        }
      }
      if (tmax >= kInf) throw std::runtime_error("float lp: unbounded");
      if (tmax <= 1e-12) {
        if (++stall > 50000) throw std::runtime_error("float lp: stalled");
      } else {
        stall = 0;
      }

      for (int i = 0; i < a.nrows; ++i)
        if (w[size_t(i)] != 0) xB[size_t(i)] -= double(dir) * w[size_t(i)] * tmax;
      if (leave_slot < 0) {
        // bound flip
        stat[size_t(q)] = dir > 0 ? AtUpper : AtLower;
        continue;
      }
      int leave = basis[size_t(leave_slot)];
      double enter_val = nb_value(q) + double(dir) * tmax;
      basis[size_t(leave_slot)] = q;
      where[size_t(q)] = leave_slot;
      stat[size_t(q)] = Basic;
      xB[size_t(leave_slot)] = enter_val;
      where[size_t(leave)] = -1;
      stat[size_t(leave)] = leave_at_lower ? AtLower : AtUpper;
      push_eta(leave_slot, w);
    }
  }

  bool reoptimize() {
    if (!dual_loop()) return false;
    primal_loop();
    // primal pivots may drift feasibility slightly; settle the interplay
    for (int round = 0; round < 4; ++round) {
      if (!dual_loop()) return false;
      if (optimal_enough()) return true;
      primal_loop();
    }
    return true;
  }

  bool optimal_enough() const {
    std::vector<double> y = duals();
    for (int j = 0; j < a.ncols; ++j) {
      if (where[size_t(j)] >= 0) continue;
      if (a.haslo[size_t(j)] && a.hasup[size_t(j)] && a.lo[size_t(j)] == a.up[size_t(j)])
        continue;
      double d = reduced_cost(j, y);
      VStat s = stat[size_t(j)];
      if ((s == AtLower || s == FreeAtZero) && d < -kDualTol * 10) return false;
      if ((s == AtUpper || s == FreeAtZero) && d > kDualTol * 10) return false;
    }
    return true;
  }

  double model_value(int j) const {
    return where[size_t(j)] >= 0 ? xB[size_t(where[size_t(j)])] : nb_value(j);
  }

  void set_bounds(int var, double lob, double upb) {
    a.lo[size_t(var)] = lob;
    a.up[size_t(var)] = upb;
    a.haslo[size_t(var)] = lob > -kInf;
    a.hasup[size_t(var)] = upb < kInf;
    a.xlo[size_t(var)] = Rat(lob > -kInf ? lob : 0.0);
    a.xup[size_t(var)] = Rat(upb < kInf ? upb : 0.0);
    if (where[size_t(var)] < 0) {
      // snap the nonbasic value into the new box and refresh basics
      VStat s = stat[size_t(var)];
      double v = nb_value(var);
      if (s == FreeAtZero && (lob > 0 || upb < 0)) s = lob > 0 ? AtLower : AtUpper;
      if (v < lob) s = AtLower;
      if (v > upb) s = AtUpper;
      stat[size_t(var)] = s;
      recompute_xB();
    }
  }
};

// ------------------------- exact verification -------------------------

struct ExactState {
  const Arrays& a;
  std::vector<int> basis;
  std::vector<int> where;
  std::vector<VStat> stat;
  SparseLU<Rat> lu;
  std::vector<Eta<Rat>> etas;
  std::vector<Rat> xB;
  long pivots = 0;

  ExactState(const Arrays& arrays, const Engine& e)
      : a(arrays), basis(e.basis), where(e.where), stat(e.stat) {
    refactor();
  }

  void refactor() {
    std::vector<std::vector<std::pair<int, Rat>>> cols(size_t(a.nrows));
    for (int r = 0; r < a.nrows; ++r) cols[size_t(r)] = a.xcol[size_t(basis[size_t(r)])];
    if (!lu.factor(cols)) throw std::runtime_error("exactify: singular basis");
    etas.clear();
    recompute();
  }

  Rat nb_value(int j) const {
    switch (stat[size_t(j)]) {
      case AtLower: return a.xlo[size_t(j)];
      case AtUpper: return a.xup[size_t(j)];
      default: return Rat(0);
    }
  }

  void recompute() {
    std::vector<Rat> rhs = a.xb;
    for (int j = 0; j < a.ncols; ++j) {
      if (where[size_t(j)] >= 0) continue;
      Rat v = nb_value(j);
      if (v == 0) continue;
      for (auto& [r, av] : a.xcol[size_t(j)]) rhs[size_t(r)] -= av * v;
    }
    ftran(rhs);
    xB = std::move(rhs);
  }

  void ftran(std::vector<Rat>& x) const {
    lu.ftran(x);
    for (auto& e : etas) eta_ftran(e, x);
  }

  void btran(std::vector<Rat>& x) const {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      Rat s = 0;
      for (auto& [i, wi] : it->w)
        if (i != it->p) s += wi * x[size_t(i)];
      x[size_t(it->p)] = (x[size_t(it->p)] - s) / it->wp;
    }
    lu.btran(x);
  }

  std::vector<Rat> duals() const {
    std::vector<Rat> c(size_t(a.nrows), Rat(0));
    for (int r = 0; r < a.nrows; ++r) c[size_t(r)] = a.xcost[size_t(basis[size_t(r)])];
    btran(c);
    return c;
  }

  Rat reduced_cost(int j, const std::vector<Rat>& y) const {
    Rat d = a.xcost[size_t(j)];
    for (auto& [r, av] : a.xcol[size_t(j)]) d -= y[size_t(r)] * av;
    return d;
  }

  bool fixed_col(int j) const {
    return a.haslo[size_t(j)] && a.hasup[size_t(j)] && a.xlo[size_t(j)] == a.xup[size_t(j)];
  }

  void pivot(int slot, int entering, std::vector<Rat>& w, VStat leave_stat) {
    int leave = basis[size_t(slot)];
    basis[size_t(slot)] = entering;
    where[size_t(entering)] = slot;
    stat[size_t(entering)] = Basic;
    where[size_t(leave)] = -1;
    stat[size_t(leave)] = leave_stat;
    Eta<Rat> e;
    e.p = slot;
    e.wp = w[size_t(slot)];
    for (int i = 0; i < a.nrows; ++i)
      if (w[size_t(i)] != 0) e.w.emplace_back(i, w[size_t(i)]);
    etas.push_back(std::move(e));
    if (int(etas.size()) >= 32) refactor(); else recompute();
    if (++pivots > 20000) throw std::runtime_error("exactify: pivot limit");
  }

  std::vector<Rat> col_dense(int j) const {
    std::vector<Rat> w(size_t(a.nrows), Rat(0));
    for (auto& [r, av] : a.xcol[size_t(j)]) w[size_t(r)] = av;
    return w;
  }

  // Bland-rule exact primal phase 2. Requires exact primal feasibility.
  // Returns false on unbounded (cannot happen for boxed storage models).
  bool primal_cleanup() {
    for (;;) {
      std::vector<Rat> y = duals();
      int q = -1;
      int dir = +1;
      for (int j = 0; j < a.ncols; ++j) {
        if (where[size_t(j)] >= 0 || fixed_col(j)) continue;
        Rat d = reduced_cost(j, y);
        VStat s = stat[size_t(j)];
        if ((s == AtLower || s == FreeAtZero) && d < 0) { q = j; dir = +1; break; }
        if ((s == AtUpper || s == FreeAtZero) && d > 0) { q = j; dir = -1; break; }
      }
      if (q < 0) return true;
      std::vector<Rat> w = col_dense(q);
      ftran(w);
      bool have_t = false;
      Rat tmax = 0;
      int leave_slot = -1;
      bool leave_lower = false;
      if (a.haslo[size_t(q)] && a.hasup[size_t(q)]) {
        tmax = a.xup[size_t(q)] - a.xlo[size_t(q)];
        have_t = true;
      }
      for (int i = 0; i < a.nrows; ++i) {
        if (w[size_t(i)] == 0) continue;
        int bj = basis[size_t(i)];
        Rat move = -Rat(dir) * w[size_t(i)];
        Rat room;
        bool to_lower;
        if (move < 0) {
          if (!a.haslo[size_t(bj)]) continue;
          room = (xB[size_t(i)] - a.xlo[size_t(bj)]) / -move;
          to_lower = true;
        } else {
          if (!a.hasup[size_t(bj)]) continue;
          room = (a.xup[size_t(bj)] - xB[size_t(i)]) / move;
          to_lower = false;
        }
        // Bland tie-break: lowest leaving column id
        bool take = !have_t || room < tmax ||
                    (room == tmax && leave_slot >= 0 && bj < basis[size_t(leave_slot)]);
        if (take) {
          tmax = room;
          leave_slot = i;
          leave_lower = to_lower;
          have_t = true;
        }
      }
      if (!have_t) return false;  // unbounded direction
      if (leave_slot < 0) {
        stat[size_t(q)] = dir > 0 ? AtUpper : AtLower;
        recompute();
        continue;
      }
      pivot(leave_slot, q, w, leave_lower ? AtLower : AtUpper);
    }
  }

  // Bland-rule exact dual: drives out exact primal infeasibilities while
  // keeping exact dual feasibility. Returns false when exactly infeasible.
  bool dual_cleanup() {
    for (;;) {
      int r = -1;
      bool below = false;
      for (int i = 0; i < a.nrows; ++i) {
        int j = basis[size_t(i)];
        if (a.haslo[size_t(j)] && xB[size_t(i)] < a.xlo[size_t(j)]) {
          r = i;
          below = true;
          break;
        }
        if (a.hasup[size_t(j)] && xB[size_t(i)] > a.xup[size_t(j)]) {
          r = i;
          below = false;
          break;
        }
      }
      if (r < 0) return true;
      std::vector<Rat> rho(size_t(a.nrows), Rat(0));
      rho[size_t(r)] = 1;
      btran(rho);
      std::vector<Rat> y = duals();
      int q = -1;
      Rat best_ratio = 0;
      bool have = false;
      for (int j = 0; j < a.ncols; ++j) {
        if (where[size_t(j)] >= 0 || fixed_col(j)) continue;
        Rat alpha = 0;
        for (auto& [rr, av] : a.xcol[size_t(j)]) alpha += rho[size_t(rr)] * av;
        if (alpha == 0) continue;
        VStat s = stat[size_t(j)];
        bool ok = false;
        if (s == AtLower || s == FreeAtZero) ok = below ? (alpha < 0) : (alpha > 0);
        if (!ok && s == AtUpper) ok = below ? (alpha > 0) : (alpha < 0);
        if (!ok) continue;
        Rat ratio = abs(reduced_cost(j, y)) / abs(alpha);
        if (!have || ratio < best_ratio || (ratio == best_ratio && j < q)) {
          best_ratio = ratio;
          q = j;
          have = true;
        }
      }
      if (!have) return false;  // exact Farkas situation: infeasible
      std::vector<Rat> w = col_dense(q);
      ftran(w);
      pivot(r, q, w, below ? AtLower : AtUpper);
    }
  }

  ExactifiedLp finish() {
    ExactifiedLp out;
    // dual repair by bound flips where a nonbasic rests on the wrong bound
    {
      std::vector<Rat> y = duals();
      bool flipped = false;
      for (int j = 0; j < a.ncols; ++j) {
        if (where[size_t(j)] >= 0 || fixed_col(j)) continue;
        Rat d = reduced_cost(j, y);
        VStat s = stat[size_t(j)];
        if ((s == AtLower || s == FreeAtZero) && d < 0 && a.hasup[size_t(j)]) {
          stat[size_t(j)] = AtUpper;
          flipped = true;
        } else if ((s == AtUpper || s == FreeAtZero) && d > 0 && a.haslo[size_t(j)]) {
          stat[size_t(j)] = AtLower;
          flipped = true;
        }
      }
      if (flipped) recompute();
    }
    if (!dual_cleanup()) {
      out.status = SolveStatus::Infeasible;
      out.cleanup_pivots = pivots;
      return out;
    }
    if (!primal_cleanup()) throw std::runtime_error("exactify: unbounded");
    // primal pivots kept primal feasibility; dual flips settled beforehand,
    // so the state is now exactly optimal
    out.status = SolveStatus::Optimal;
    out.cleanup_pivots = pivots;
    out.x.assign(size_t(a.nstruct), Rat(0));
    for (int j = 0; j < a.nstruct; ++j)
      out.x[size_t(j)] = where[size_t(j)] >= 0 ? xB[size_t(where[size_t(j)])] : nb_value(j);
    Rat obj = a.obj_const;
    for (int j = 0; j < a.nstruct; ++j) {
      Rat c = a.xcost[size_t(j)];
      if (c != 0) obj += (a.user_minimize ? c : -c) * out.x[size_t(j)];
    }
    out.objective = obj;
    return out;
  }
};

} // namespace

// ------------------------- public interface -------------------------

struct BnbLp::Impl {
  Engine eng;
  explicit Impl(const ModelInstance& m) : eng(build_arrays(m)) {}
};

BnbLp::BnbLp(const ModelInstance& relaxed) : impl(std::make_unique<Impl>(relaxed)) {}
BnbLp::~BnbLp() = default;

void BnbLp::set_bounds(int var, double lb, double ub) {
  impl->eng.set_bounds(var, std::isnan(lb) ? impl->eng.a.lo[size_t(var)] : lb,
                       std::isnan(ub) ? impl->eng.a.up[size_t(var)] : ub);
}

bool BnbLp::reoptimize() { return impl->eng.reoptimize(); }

double BnbLp::objective() const {
  double v = impl->eng.objective();
  return impl->eng.a.user_minimize ? v + impl->eng.a.obj_const.get_d()
                                   : -v + impl->eng.a.obj_const.get_d();
}

double BnbLp::value(int var) const { return impl->eng.model_value(var); }

long BnbLp::iterations() const { return impl->eng.iters; }

ExactifiedLp BnbLp::exactify() {
  ExactState st(impl->eng.a, impl->eng);
  ExactifiedLp out = st.finish();
  out.float_iterations = impl->eng.iters;
  return out;
}

ExactifiedLp solve_lp_float(const ModelInstance& m) {
  Engine eng(build_arrays(m));
  if (!eng.reoptimize()) {
    // float run says infeasible; confirm exactly before reporting
    ExactState st(eng.a, eng);
    ExactifiedLp out = st.finish();
    out.float_iterations = eng.iters;
    return out;
  }
  ExactState st(eng.a, eng);
  ExactifiedLp out = st.finish();
  out.float_iterations = eng.iters;
  return out;
}

} // namespace tsf
