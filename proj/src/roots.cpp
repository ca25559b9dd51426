#include "addmin/roots.hpp"

#include <stdexcept>

namespace addmin {

std::vector<Poly> sturm_sequence(const Poly& q) {
  std::vector<Poly> seq;
  seq.push_back(q.primitive_integer());
  Poly d = q.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive_integer());
  while (true) {
    Poly quo, rem;
    Poly::divmod(seq[seq.size() - 2], seq.back(), quo, rem);
    if (rem.is_zero()) break;
    seq.push_back((-rem).primitive_integer());
  }
  return seq;
}

int sign_variations(const std::vector<Poly>& seq, const Rat& x) {
  int vars = 0, prev = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

const Rat& RealValue::rat() const {
  if (!exact_) throw std::logic_error("rat() on an algebraic RealValue");
  return value_;
}

RealValue RealValue::root_of(const Poly& q, Rat lo, Rat hi) {
  int slo = q.sign_at(lo);
  int shi = q.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::logic_error("root_of: bracket does not isolate a simple root");

  // A rational root a/b in lowest terms has b dividing the leading
  // coefficient of the primitive integer form; an interval narrower than
  // 1/lc^2 holds at most one rational with denominator <= lc, and the
  // simplest rational in the bracket is it.
  Poly qi = q.primitive_integer();
  Int lc = qi.leading().get_num();
  if (lc < 0) lc = -lc;
  Rat target = rat(Int(1), lc * lc);
  while (hi - lo >= target) {
    Rat mid = (lo + hi) / 2;
    int sm = q.sign_at(mid);
    if (sm == 0) return RealValue(mid);
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  Rat cand = simplest_rational_between(lo, hi);
  if (q.sign_at(cand) == 0) return RealValue(cand);

  RealValue v;
  v.exact_ = false;
  v.value_ = 0;
  v.poly_ = q;
  v.lo_ = std::move(lo);
  v.hi_ = std::move(hi);
  v.sign_lo_ = slo;
  return v;
}

void RealValue::refine_to(const Rat& width) const {
  if (exact_) return;
  while (hi_ - lo_ > width) {
    Rat mid = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0)
      throw std::logic_error("rational root escaped identification");
    if (sm == sign_lo_)
      lo_ = mid;
    else
      hi_ = mid;
  }
}

std::pair<Rat, Rat> RealValue::approx(const Rat& width) const {
  if (exact_) return {value_, Rat(0)};
  refine_to(width);
  return {(lo_ + hi_) / 2, (hi_ - lo_) / 2};
}

double RealValue::to_double() const {
  if (exact_) return rat_to_double(value_);
  refine_to(rat(1, 1000000000L) / 1000000000L);  // 1e-18
  return rat_to_double((lo_ + hi_) / 2);
}

int RealValue::compare_rat(const Rat& r) const {
  if (exact_) return cmp(value_, r) < 0 ? -1 : (value_ == r ? 0 : 1);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  int sr = poly_.sign_at(r);
  if (sr == 0) return 0;
  // same sign as at lo_ means r is left of the root
  return sr == sign_lo_ ? 1 : -1;
}

int RealValue::compare(const RealValue& o) const {
  if (exact_ && o.exact_) {
    int c = cmp(value_, o.value_);
    return c < 0 ? -1 : (c == 0 ? 0 : 1);
  }
  if (exact_) return -o.compare_rat(value_);
  if (o.exact_) return compare_rat(o.rat());

  for (int iter = 0; iter < 4096; ++iter) {
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    if (iter == 0) {
      // overlapping brackets: equal iff a shared root lies in the overlap
      Poly g = Poly::gcd(poly_, o.poly_);
      if (g.degree() >= 1) {
        Rat a = lo_ > o.lo_ ? lo_ : o.lo_;
        Rat b = hi_ < o.hi_ ? hi_ : o.hi_;
        auto seq = sturm_sequence(g.square_free_part());
        if (sturm_count(seq, a, b) >= 1) return 0;
      }
    }
    Rat w = (hi_ - lo_) / 2;
    refine_to(w);
    Rat ow = (o.hi_ - o.lo_) / 2;
    o.refine_to(ow);
  }
  throw std::logic_error("RealValue::compare failed to separate values");
}

namespace {

// Distinct roots of q in the open interval (lo, hi); q(lo) != 0 != q(hi).
void isolate_open(const Poly& q, const std::vector<Poly>& seq, const Rat& lo,
                  const Rat& hi, int vlo, int vhi,
                  std::vector<RealValue>& out, std::vector<Rat>& exact_hits) {
  int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RealValue::root_of(q, lo, hi));
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (q.sign_at(mid) == 0) {
    // restart with the root divided out
    exact_hits.push_back(mid);
    return;
  }
  int vmid = sign_variations(seq, mid);
  isolate_open(q, seq, lo, mid, vlo, vmid, out, exact_hits);
  isolate_open(q, seq, mid, hi, vmid, vhi, out, exact_hits);
}

}  // namespace

std::vector<RealValue> isolate_real_roots(const Poly& p, const Rat& lo,
                                          const Rat& hi) {
  if (p.is_zero()) throw std::domain_error("indeterminate root set");
  if (lo > hi) throw std::invalid_argument("isolate_real_roots: empty domain");

  std::vector<RealValue> out;
  Poly q = p.square_free_part();
  if (q.degree() == 0) return out;

  if (q.sign_at(lo) == 0) {
    out.emplace_back(lo);
    q = Poly::div_exact(q, Poly{-lo, Rat(1)});
  }
  if (hi != lo && q.sign_at(hi) == 0) {
    out.emplace_back(hi);
    q = Poly::div_exact(q, Poly{-hi, Rat(1)});
  }
  while (lo != hi && q.degree() >= 1) {
    auto seq = sturm_sequence(q);
    std::vector<Rat> exact_hits;
    std::vector<RealValue> found;
    isolate_open(q, seq, lo, hi, sign_variations(seq, lo),
                 sign_variations(seq, hi), found, exact_hits);
    if (exact_hits.empty()) {
      for (auto& v : found) out.push_back(std::move(v));
      break;
    }
    // a bisection midpoint landed on a root: record it, strip it, rerun
    for (const auto& r : exact_hits) {
      out.emplace_back(r);
      q = Poly::div_exact(q, Poly{-r, Rat(1)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RealValue& a, const RealValue& b) { return a < b; });
  return out;
}

Rat strict_rational_between(const RealValue& a, const RealValue& b) {
  if (a.is_exact() && b.is_exact()) {
    if (!(a.rat() < b.rat()))
      throw std::invalid_argument("strict_rational_between: a >= b");
    return (a.rat() + b.rat()) / 2;
  }
  for (int iter = 0; iter < 4096; ++iter) {
    if (a.is_exact()) {
      if (a.rat() < b.lower()) return (a.rat() + b.lower()) / 2;
    } else if (b.is_exact()) {
      if (a.upper() < b.rat()) return (a.upper() + b.rat()) / 2;
    } else if (a.upper() < b.lower()) {
      return simplest_rational_between(a.upper(), b.lower());
    }
    if (!a.is_exact()) a.refine_to((a.upper() - a.lower()) / 2);
    if (!b.is_exact()) b.refine_to((b.upper() - b.lower()) / 2);
  }
  throw std::logic_error("strict_rational_between failed to separate values");
}

}  // namespace addmin
