#pragma once

#include "tsf/rational.hpp"

#include <map>
#include <vector>

namespace tsf {

// Sparse exact linear form sum_i coeff[i] * x_i + constant.
// Invariant: no stored zero coefficients; ids are indices into the owning
// object's variable table. std::map keeps term order deterministic.
struct LinearForm {
  std::map<int, Rat> coeffs;
  Rat constant = 0;

  static LinearForm term(int var, Rat c) {
    LinearForm f;
    f.set(var, std::move(c));
    return f;
  }

  const Rat* find(int var) const {
    auto it = coeffs.find(var);
    return it == coeffs.end() ? nullptr : &it->second;
  }
  Rat coeff(int var) const {
    auto* c = find(var);
    return c ? *c : Rat(0);
  }
  void set(int var, Rat c) {
    if (c == 0)
      coeffs.erase(var);
    else
      coeffs[var] = std::move(c);
  }
  void add(int var, const Rat& c) { set(var, coeff(var) + c); }

  bool is_constant() const { return coeffs.empty(); }

  Rat eval(const std::vector<Rat>& x) const {
    Rat v = constant;
    for (auto& [i, c] : coeffs) v += c * x[size_t(i)];
    return v;
  }

  LinearForm& operator*=(const Rat& s);
  LinearForm& operator+=(const LinearForm& o);

  // Replace variable `var` with the form `repl` (used for Gaussian-style
  // equality substitution in FM and lifting).
  void substitute(int var, const LinearForm& repl);

  // Rewrite variable ids through `map`; ids mapping to -1 must be absent.
  LinearForm remap(const std::vector<int>& map) const;

  bool operator==(const LinearForm& o) const = default;
};

// alpha*a + beta*b, exact, zero-pruned.
LinearForm linform_combine(const LinearForm& a, const Rat& alpha,
                           const LinearForm& b, const Rat& beta);

} // namespace tsf
