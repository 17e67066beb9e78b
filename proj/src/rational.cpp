#include "tsf/rational.hpp"

#include <cctype>

namespace tsf {

Rat rational_reduce(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDenominator();
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rational_reduce(long num, long den) {
  return rational_reduce(mpz_class(num), mpz_class(den));
}

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_str_short(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rat_str(q);
}

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    return rational_reduce(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
      throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return rational_reduce(num, den);
  }
  mpz_class num;
  if (num.set_str(text, 10) != 0)
    throw std::invalid_argument("bad integer literal: " + text);
  return Rat(num);
}

double rat_to_double(const Rat& q) { return q.get_d(); }

} // namespace tsf
