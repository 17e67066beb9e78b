#include "tsf/redundancy.hpp"

#include "tsf/lp_exact.hpp"

#include <algorithm>

namespace tsf {

namespace {

LinearConstraint as_le(const LinearConstraint& r, bool flip) {
  LinearConstraint out = r;
  out.sense = Sense::LE;
  if (flip) {
    for (auto& [v, c] : out.form.coeffs) c = -c;
    out.rhs = -out.rhs;
  }
  out.normalize();
  return out;
}

std::vector<std::pair<std::string, Rat>> name_multipliers(
    const Polyhedron& ctx, const std::vector<Rat>& lam) {
  std::vector<std::pair<std::string, Rat>> out;
  for (size_t i = 0; i < lam.size() && i < ctx.rows.size(); ++i)
    if (lam[i] != 0) out.emplace_back(ctx.rows[i].label, lam[i]);
  return out;
}

} // namespace

ReduceResult remove_redundant(const Polyhedron& P) {
  ReduceResult res;
  res.poly = P;
  res.poly.canonicalize();
  if (res.poly.rows.empty()) return res;

  // canonicalize() already removed exact duplicates silently; recover them
  // for the log by diffing against the normalized input.
  {
    std::vector<LinearConstraint> norm = P.rows;
    for (auto& r : norm) r.normalize();
    std::vector<bool> seen(res.poly.rows.size(), false);
    for (const auto& r : norm) {
      bool matched = false;
      for (size_t k = 0; k < res.poly.rows.size(); ++k) {
        const auto& keep = res.poly.rows[k];
        if (!seen[k] && keep.sense == r.sense && keep.rhs == r.rhs && keep.same_lhs(r)) {
          seen[k] = true;
          matched = true;
          break;
        }
      }
      if (!matched) {
        // duplicate of some keeper
        for (const auto& keep : res.poly.rows) {
          if (keep.sense == r.sense && keep.rhs == r.rhs && keep.same_lhs(r)) {
            res.removed.push_back({r, "duplicate", keep.label, {}});
            break;
          }
        }
      }
    }
  }

  // Same coefficient vector, slacker right-hand side.
  {
    std::vector<LinearConstraint> kept;
    for (const auto& r : res.poly.rows) {
      bool drop = false;
      for (auto& k : kept) {
        if (k.sense != Sense::LE || r.sense != Sense::LE || !k.same_lhs(r)) continue;
        if (k.rhs <= r.rhs) {
          res.removed.push_back({r, "dominated", k.label, {{k.label, Rat(1)}}});
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(r);
    }
    res.poly.rows = std::move(kept);
  }

  if (is_empty(res.poly)) return res;  // keep the inconsistent system intact

  // LP pass, canonical order, shrinking the context as rows fall.
  for (size_t i = 0; i < res.poly.rows.size();) {
    Polyhedron ctx = res.poly;
    ctx.rows.erase(ctx.rows.begin() + i);
    const LinearConstraint& row = res.poly.rows[i];

    bool implied = false;
    std::vector<std::pair<std::string, Rat>> mults;
    try {
      if (row.sense == Sense::LE) {
        RowCheck rc = check_row_implied(ctx, row);
        implied = rc.implied;
        if (implied) mults = name_multipliers(ctx, rc.multipliers);
      } else {
        RowCheck fwd = check_row_implied(ctx, as_le(row, false));
        if (fwd.implied) {
          RowCheck bwd = check_row_implied(ctx, as_le(row, true));
          implied = bwd.implied;
          // Certificate covers the <= direction; the >= direction was
          // verified symmetrically.
          if (implied) mults = name_multipliers(ctx, fwd.multipliers);
        }
      }
    } catch (const Unbounded&) {
      implied = false;
    }

    if (implied) {
      res.removed.push_back({row, "farkas", "", std::move(mults)});
      res.poly.rows.erase(res.poly.rows.begin() + i);
    } else {
      ++i;
    }
  }
  return res;
}

} // namespace tsf
