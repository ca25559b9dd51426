#pragma once

// Real-root isolation via Sturm sequences, plus RealValue: an exact real
// number that is either a rational or an isolated algebraic root with a
// refinable bracket. Comparisons between RealValues are exact (interval
// refinement, with a gcd test to decide equality of roots of different
// polynomials), which is what makes interval endpoints mergeable without
// floating-point guesses.

#include <compare>
#include <vector>

#include "addmin/poly.hpp"

namespace addmin {

// Sturm chain of the square-free polynomial q, entries scaled to primitive
// integer form (positive scaling preserves all sign information).
std::vector<Poly> sturm_sequence(const Poly& q);

int sign_variations(const std::vector<Poly>& seq, const Rat& x);

// Number of distinct roots of the chain's polynomial in (a, b].
int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b);

class RealValue {
 public:
  RealValue() : exact_(true), value_(0) {}
  explicit RealValue(Rat v) : exact_(true), value_(std::move(v)) {}

  // The unique root of the square-free q in the open interval (lo, hi);
  // q(lo) != 0 != q(hi). Rational roots are detected and returned exact.
  static RealValue root_of(const Poly& q, Rat lo, Rat hi);

  bool is_exact() const { return exact_; }
  const Rat& rat() const;  // pre: exact

  // Rational bracket; lower == upper == value when exact.
  Rat lower() const { return exact_ ? value_ : lo_; }
  Rat upper() const { return exact_ ? value_ : hi_; }
  const Poly& defining_poly() const { return poly_; }  // zero when exact

  void refine_to(const Rat& width) const;
  // Midpoint approximation and an error bound after refining to `width`.
  std::pair<Rat, Rat> approx(const Rat& width) const;
  double to_double() const;

  // sign of (*this - other): -1, 0, +1
  int compare(const RealValue& other) const;
  int compare_rat(const Rat& r) const;

  bool operator==(const RealValue& o) const { return compare(o) == 0; }
  bool operator<(const RealValue& o) const { return compare(o) < 0; }
  bool operator<=(const RealValue& o) const { return compare(o) <= 0; }

 private:
  bool exact_;
  Rat value_;
  Poly poly_;            // square-free; only one root in (lo_, hi_)
  mutable Rat lo_, hi_;  // open bracket, sign(poly(lo)) == -sign(poly(hi))
  mutable int sign_lo_ = 0;
};

// All distinct real roots of p in the closed interval [lo, hi], ascending.
// Throws std::domain_error on the zero polynomial.
std::vector<RealValue> isolate_real_roots(const Poly& p, const Rat& lo,
                                          const Rat& hi);

// Some rational strictly between a and b. Pre: a < b.
Rat strict_rational_between(const RealValue& a, const RealValue& b);

}  // namespace addmin
