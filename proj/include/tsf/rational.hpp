#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <cstdint>

namespace tsf {

// Exact rational scalar. mpq_class keeps the canonical invariant we need:
// reduced fraction, positive denominator, 0 stored as 0/1.
using Rat = mpq_class;

struct ZeroDenominator : std::invalid_argument {
  ZeroDenominator() : std::invalid_argument("rational with zero denominator") {}
};

// Build a reduced rational from an integer pair. Throws ZeroDenominator.
Rat rational_reduce(const mpz_class& num, const mpz_class& den);
Rat rational_reduce(long num, long den);

// Canonical "n/d" text. Always prints the denominator ("5/1", "-1/2", "0/1").
std::string rat_str(const Rat& q);

// Short form: integers print without "/1"; used in human-readable output.
std::string rat_str_short(const Rat& q);

// Accepts "n/d", plain integers ("-3"), and finite decimals ("0.9", "-12.25"),
// all parsed exactly. Throws std::invalid_argument on anything else,
// ZeroDenominator on "n/0".
Rat rat_parse(const std::string& text);

// Exact double conversion helpers for the float solve path.
double rat_to_double(const Rat& q);

inline int rat_sign(const Rat& q) { return sgn(q); }

} // namespace tsf
