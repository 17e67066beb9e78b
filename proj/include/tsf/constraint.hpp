#pragma once

#include "tsf/linform.hpp"

#include <string>

namespace tsf {

enum class Sense { LE, EQ };

// One row a'x (<=|=) rhs. The stored form is normalized so that syntactic
// comparisons are meaningful:
//  - sense GE is rewritten to LE on input (negate both sides),
//  - coefficients and rhs are scaled to coprime integers,
//  - equality rows additionally get a positive leading coefficient.
// The constant part of `form` is folded into `rhs`.
struct LinearConstraint {
  LinearForm form;   // constant always 0 after normalize()
  Sense sense = Sense::LE;
  Rat rhs = 0;
  std::string label;

  void normalize();

  // True if this row's coefficient vector equals `o`'s; normalization makes
  // this a plain comparison.
  bool same_lhs(const LinearConstraint& o) const { return form == o.form; }

  Rat violation(const std::vector<Rat>& x) const {
    Rat lhs = form.eval(x);
    if (sense == Sense::LE) return lhs > rhs ? Rat(lhs - rhs) : Rat(0);
    return lhs == rhs ? Rat(0) : Rat(abs(lhs - rhs));
  }
  bool satisfied(const std::vector<Rat>& x) const { return violation(x) == 0; }

  // Lexicographic key (sense, coeff vector, rhs); label ignored.
  static int compare(const LinearConstraint& a, const LinearConstraint& b);
};

LinearConstraint make_le(LinearForm f, Rat rhs, std::string label);
LinearConstraint make_ge(LinearForm f, Rat rhs, std::string label);
LinearConstraint make_eq(LinearForm f, Rat rhs, std::string label);

// Human-readable rendering, e.g. "e[0] - 1/2 pc[1] <= 45". Variable indices
// are resolved through `vars`; rationals print in short form.
std::string row_text(const LinearConstraint& c, const std::vector<std::string>& vars);

} // namespace tsf
