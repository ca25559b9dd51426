#include "addmin/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace addmin {

Rat rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mantissa parts + decimal exponent -> exact rational
Rat from_decimal_parts(bool neg, const std::string& int_part,
                       const std::string& frac_part, long exp10) {
  Int num(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
  }
  long shift = exp10 - static_cast<long>(frac_part.size());
  Int den(1);
  if (shift >= 0)
    num *= pow10_int(static_cast<unsigned>(shift));
  else
    den = pow10_int(static_cast<unsigned>(-shift));
  if (neg) num = -num;
  return rat(num, den);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    bool nneg = false, dneg = false;
    if (!ns.empty() && (ns[0] == '+' || ns[0] == '-')) {
      nneg = ns[0] == '-';
      ns.erase(0, 1);
    }
    if (!ds.empty() && (ds[0] == '+' || ds[0] == '-')) {
      dneg = ds[0] == '-';
      ds.erase(0, 1);
    }
    if (!all_digits(ns) || !all_digits(ds))
      throw std::invalid_argument("malformed fraction: " + text);
    Int num(ns), den(ds);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    if (nneg != dneg) num = -num;
    return rat(num, den);
  }

  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string int_part, frac_part, exp_part;
  bool neg_exp = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    int_part.push_back(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      frac_part.push_back(s[i++]);
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg_exp = s[i] == '-';
      ++i;
    }
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      exp_part.push_back(s[i++]);
    if (exp_part.empty())
      throw std::invalid_argument("malformed exponent: " + text);
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("malformed rational literal: " + text);
  long exp10 = exp_part.empty() ? 0 : std::stol(exp_part);
  if (neg_exp) exp10 = -exp10;
  return from_decimal_parts(neg, int_part, frac_part, exp10);
}

std::string format_rat(const Rat& q) {
  Int num = q.get_num(), den = q.get_den();
  // strip factors of 2 and 5 from the denominator
  Int rest = den;
  unsigned a = 0, b = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++a;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++b;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();
  unsigned m = a > b ? a : b;
  if (m == 0) return num.get_str();
  Int scale = pow10_int(m) / den;
  Int digits = num * scale;
  bool neg = digits < 0;
  if (neg) digits = -digits;
  Int ten_m = pow10_int(m);
  Int ip = digits / ten_m, fp = digits % ten_m;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), m - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

namespace {

// 0 < lo <= hi; smallest-denominator rational in [lo, hi].
Rat simplest_pos(const Rat& lo, const Rat& hi) {
  Int fl;
  mpz_cdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(),
             lo.get_den().get_mpz_t());  // ceil(lo)
  if (Rat(fl) <= hi) return Rat(fl);
  Int n;
  mpz_fdiv_q(n.get_mpz_t(), lo.get_num().get_mpz_t(),
             lo.get_den().get_mpz_t());  // floor(lo) == floor(hi) here
  Rat fr = simplest_pos(Rat(1) / (hi - Rat(n)), Rat(1) / (lo - Rat(n)));
  return Rat(n) + Rat(1) / fr;
}

}  // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_between: lo > hi");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_pos(-hi, -lo);
  return simplest_pos(lo, hi);
}

Int pow10_int(unsigned k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace addmin
