#include "tsf/constraint.hpp"

namespace tsf {

void LinearConstraint::normalize() {
  rhs -= form.constant;
  form.constant = 0;
  if (form.coeffs.empty()) return;

  // Scale by lcm(dens)/gcd(nums) so entries become coprime integers.
  mpz_class den_lcm = 1, num_gcd = 0;
  auto fold = [&](const Rat& q) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    den_lcm = l;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    num_gcd = g;
  };
  for (auto& [i, c] : form.coeffs) fold(c);
  fold(rhs);
  if (num_gcd == 0) num_gcd = 1;

  Rat scale = rational_reduce(den_lcm, num_gcd);
  if (sense == Sense::EQ && form.coeffs.begin()->second < 0) scale = -scale;
  if (scale != 1) {
    form *= scale;
    rhs *= scale;
  }
}

int LinearConstraint::compare(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.sense != b.sense) return a.sense == Sense::EQ ? -1 : 1;
  // Dense lexicographic order over variable ids; absent entries read as 0.
  static const Rat zero(0);
  auto ia = a.form.coeffs.begin(), ib = b.form.coeffs.begin();
  while (ia != a.form.coeffs.end() || ib != b.form.coeffs.end()) {
    int va = ia == a.form.coeffs.end() ? INT32_MAX : ia->first;
    int vb = ib == b.form.coeffs.end() ? INT32_MAX : ib->first;
    int v = va < vb ? va : vb;
    const Rat& ca = va == v ? ia->second : zero;
    const Rat& cb = vb == v ? ib->second : zero;
    if (ca != cb) return ca < cb ? -1 : 1;
    if (va == v) ++ia;
    if (vb == v) ++ib;
  }
  if (a.rhs != b.rhs) return a.rhs < b.rhs ? -1 : 1;
  return 0;
}

LinearConstraint make_le(LinearForm f, Rat rhs, std::string label) {
  LinearConstraint c{std::move(f), Sense::LE, std::move(rhs), std::move(label)};
  c.normalize();
  return c;
}

LinearConstraint make_ge(LinearForm f, Rat rhs, std::string label) {
  f *= Rat(-1);
  return make_le(std::move(f), -rhs, std::move(label));
}

LinearConstraint make_eq(LinearForm f, Rat rhs, std::string label) {
  LinearConstraint c{std::move(f), Sense::EQ, std::move(rhs), std::move(label)};
  c.normalize();
  return c;
}

std::string row_text(const LinearConstraint& c, const std::vector<std::string>& vars) {
  std::string out;
  for (auto& [i, q] : c.form.coeffs) {
    Rat mag = abs(q);
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += rat_str_short(mag);
      out += " ";
    }
    out += i >= 0 && i < (int)vars.size() ? vars[size_t(i)] : "x" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (c.form.constant != 0) {
    out += c.form.constant < 0 ? " - " : " + ";
    out += rat_str_short(abs(c.form.constant));
  }
  out += c.sense == Sense::LE ? " <= " : " = ";
  out += rat_str_short(c.rhs);
  return out;
}

} // namespace tsf
