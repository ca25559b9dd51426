#include "addmin/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace addmin {

namespace {
const Rat kZero(0);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (c != 0) p.coeffs_ = {c};
  return p;
}

Poly Poly::variable() { return Poly{Rat(0), Rat(1)}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Poly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return sgn(v);
}

Poly Poly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(Rat(static_cast<long>(i)) * coeffs_[i]);
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  const Rat& lc = leading();
  return Rat(1) / lc * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rat> out = coeffs_;
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  std::vector<Rat> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return Poly(std::move(out));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  int db = b.degree();
  const Rat& lb = b.leading();
  std::vector<Rat> quot;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= db) {
    if (static_cast<int>(quot.size()) < dr - db + 1)
      quot.resize(static_cast<std::size_t>(dr - db + 1), Rat(0));
    Rat f = rem[static_cast<std::size_t>(dr)] / lb;
    quot[static_cast<std::size_t>(dr - db)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(dr - db + i)] -= f * b.coeff(i);
    rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) {
      rem.pop_back();
      --dr;
    }
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly Poly::square_free_part() const {
  if (is_zero()) throw std::domain_error("square-free part of zero polynomial");
  if (degree() == 0) return monic();
  Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return div_exact(*this, g).monic();
}

Poly Poly::primitive_integer() const {
  if (is_zero()) throw std::domain_error("primitive part of zero polynomial");
  Int den_lcm(1);
  for (const auto& c : coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<Int> ints;
  ints.reserve(coeffs_.size());
  Int content(0);
  for (const auto& c : coeffs_) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / content);
  return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = first ? c : rat_abs(c);
    first = false;
    if (i == 0 || a != 1) {
      os << format_rat(a);
      if (i > 0) os << "*";
    } else if (a == 1 && c < 0 && os.tellp() == 0) {
      os << "-";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_zero() && g.degree() >= 1) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  Rat lc = den_.leading();
  den_ = Rat(1) / lc * den_;
  num_ = Rat(1) / lc * num_;
}

RatFun RatFun::constant(const Rat& c) {
  return RatFun(Poly::constant(c), Poly::constant(Rat(1)));
}

std::optional<Rat> RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_ == Poly::constant(Rat(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace addmin
