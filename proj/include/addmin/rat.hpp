#pragma once

// Exact rational scalars. Rat is GMP's mpq_class: arbitrary-precision
// numerator, positive denominator, always in lowest terms. Everything the
// solver touches is built from these; no floating point enters a result.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace addmin {

using Rat = mpq_class;
using Int = mpz_class;

// Canonical constructor: reduces and fixes the denominator sign.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Parses "0.4", "-1.25e-2", "7/5", "3". Throws std::invalid_argument on
// malformed input.
Rat parse_rat(const std::string& text);

// Decimal string when the reduced denominator is of the form 2^a*5^b
// (exact expansion), otherwise "p/q".
std::string format_rat(const Rat& q);

double rat_to_double(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// The rational with the smallest denominator in the closed interval
// [lo, hi] (ties broken toward smaller numerator magnitude).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// 10^k for k >= 0.
Int pow10_int(unsigned k);

}  // namespace addmin
