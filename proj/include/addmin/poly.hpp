#pragma once

// Univariate polynomials over Rat (dense, ascending coefficients) and
// reduced ratios of them. Degree -1 denotes the zero polynomial.

#include <initializer_list>
#include <string>
#include <vector>

#include "addmin/rat.hpp"

namespace addmin {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly variable();  // the monomial x

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& coeff(int i) const;  // 0 outside the stored range
  const Rat& leading() const;     // pre: not zero
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;  // -1, 0, +1

  Poly derivative() const;
  Poly monic() const;  // pre: not zero

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Rat& s, const Poly& p);
  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  // Field division: a = q*b + r with deg r < deg b. Pre: b nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Division known to be exact; throws std::logic_error on a remainder.
  static Poly div_exact(const Poly& a, const Poly& b);

  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  // p / gcd(p, p'): same roots, all simple.
  Poly square_free_part() const;

  // Integer-coefficient multiple with content 1, same sign of leading
  // coefficient. Pre: not zero.
  Poly primitive_integer() const;

  std::string to_string(const std::string& var = "l") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;  // ascending; empty iff zero
};

// Reduced rational function: gcd(num, den) = 1, den monic and nonzero.
class RatFun {
 public:
  RatFun() : num_(), den_(Poly::constant(Rat(1))) {}
  RatFun(Poly num, Poly den);  // reduces
  static RatFun constant(const Rat& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // None exactly at poles of the reduced form.
  std::optional<Rat> eval(const Rat& x) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  bool operator==(const RatFun& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }

  std::string to_string(const std::string& var = "l") const;

 private:
  Poly num_, den_;
};

}  // namespace addmin
