#include "tsf/linform.hpp"

namespace tsf {

LinearForm& LinearForm::operator*=(const Rat& s) {
  if (s == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  for (auto& [i, c] : coeffs) c *= s;
  constant *= s;
  return *this;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  for (auto& [i, c] : o.coeffs) add(i, c);
  constant += o.constant;
  return *this;
}

void LinearForm::substitute(int var, const LinearForm& repl) {
  auto it = coeffs.find(var);
  if (it == coeffs.end()) return;
  Rat c = it->second;
  coeffs.erase(it);
  for (auto& [i, rc] : repl.coeffs) add(i, c * rc);
  constant += c * repl.constant;
}

LinearForm LinearForm::remap(const std::vector<int>& map) const {
  LinearForm out;
  out.constant = constant;
  for (auto& [i, c] : coeffs) {
    int j = map.at(size_t(i));
    if (j < 0) throw std::logic_error("remap drops a live variable");
    out.set(j, c);
  }
  return out;
}

LinearForm linform_combine(const LinearForm& a, const Rat& alpha,
                           const LinearForm& b, const Rat& beta) {
  LinearForm out;
  out.constant = alpha * a.constant + beta * b.constant;
  for (auto& [i, c] : a.coeffs) out.add(i, alpha * c);
  for (auto& [i, c] : b.coeffs) out.add(i, beta * c);
  return out;
}

} // namespace tsf
