#include "addmin/lambda_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace addmin {

LambdaSet LambdaSet::point(RealValue v) {
  LambdaSet s;
  s.pieces_.push_back(LambdaPiece{v, v, true, true});
  return s;
}

LambdaSet LambdaSet::interval(RealValue lo, RealValue hi, bool lo_closed,
                              bool hi_closed) {
  LambdaSet s;
  int c = lo.compare(hi);
  if (c > 0) return s;
  if (c == 0 && !(lo_closed && hi_closed)) return s;
  s.pieces_.push_back(
      LambdaPiece{std::move(lo), std::move(hi), lo_closed, hi_closed});
  return s;
}

LambdaSet LambdaSet::from_sorted_pieces(std::vector<LambdaPiece> pieces) {
  LambdaSet out;
  for (auto& p : pieces) {
    if (!out.pieces_.empty()) {
      auto& last = out.pieces_.back();
      if (last.hi.compare(p.lo) == 0 && (last.hi_closed || p.lo_closed)) {
        last.hi = p.hi;
        last.hi_closed = p.hi_closed;
        continue;
      }
    }
    out.pieces_.push_back(std::move(p));
  }
  return out;
}

bool LambdaSet::contains_rat(const Rat& x) const { return contains(RealValue(x)); }

bool LambdaSet::contains(const RealValue& x) const {
  for (const auto& p : pieces_) {
    int cl = x.compare(p.lo);
    if (cl < 0 || (cl == 0 && !p.lo_closed)) continue;
    int ch = x.compare(p.hi);
    if (ch > 0 || (ch == 0 && !p.hi_closed)) continue;
    return true;
  }
  return false;
}

// Shared engine: split the line at every endpoint involved, decide
// membership per atom (points directly, gaps via one rational sample),
// merge the surviving atoms back into maximal pieces.
LambdaSet combine_sets(const std::vector<const LambdaSet*>& sets,
                       bool want_union, const std::vector<RealValue>& removed) {
  std::vector<RealValue> bounds;
  for (const auto* s : sets)
    for (const auto& p : s->pieces_) {
      bounds.push_back(p.lo);
      bounds.push_back(p.hi);
    }
  for (const auto& v : removed) bounds.push_back(v);
  std::sort(bounds.begin(), bounds.end(),
            [](const RealValue& a, const RealValue& b) { return a < b; });
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](const RealValue& a, const RealValue& b) {
                             return a.compare(b) == 0;
                           }),
               bounds.end());
  if (bounds.empty()) return LambdaSet();

  auto point_in = [&](const RealValue& v) {
    bool in = !want_union;
    for (const auto* s : sets) {
      bool m = s->contains(v);
      in = want_union ? (in || m) : (in && m);
    }
    if (in)
      for (const auto& r : removed)
        if (v.compare(r) == 0) return false;
    return in;
  };
  auto gap_in = [&](std::size_t i) {
    Rat sample = strict_rational_between(bounds[i], bounds[i + 1]);
    bool in = !want_union;
    for (const auto* s : sets) {
      bool m = s->contains_rat(sample);
      in = want_union ? (in || m) : (in && m);
    }
    return in;
  };

  std::vector<LambdaPiece> raw;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (point_in(bounds[i]))
      raw.push_back(LambdaPiece{bounds[i], bounds[i], true, true});
    if (i + 1 < bounds.size() && gap_in(i))
      raw.push_back(LambdaPiece{bounds[i], bounds[i + 1], false, false});
  }
  return LambdaSet::from_sorted_pieces(std::move(raw));
}

LambdaSet LambdaSet::unite(const LambdaSet& other) const {
  return combine_sets({this, &other}, true, {});
}

LambdaSet LambdaSet::intersect(const LambdaSet& other) const {
  return combine_sets({this, &other}, false, {});
}

LambdaSet LambdaSet::minus_points(const std::vector<RealValue>& points) const {
  if (points.empty()) return *this;
  return combine_sets({this}, true, points);
}

bool LambdaSet::operator==(const LambdaSet& other) const {
  if (pieces_.size() != other.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& a = pieces_[i];
    const auto& b = other.pieces_[i];
    if (a.lo_closed != b.lo_closed || a.hi_closed != b.hi_closed) return false;
    if (a.lo.compare(b.lo) != 0 || a.hi.compare(b.hi) != 0) return false;
  }
  return true;
}

LambdaSet union_lambda(const std::vector<LambdaSet>& sets) {
  if (sets.empty()) return LambdaSet();
  std::vector<const LambdaSet*> ptrs;
  ptrs.reserve(sets.size());
  for (const auto& s : sets) ptrs.push_back(&s);
  return combine_sets(ptrs, true, {});
}

LambdaSet intersect_lambda(const std::vector<LambdaSet>& sets) {
  if (sets.empty())
    throw std::invalid_argument("intersect_lambda: empty intersection list");
  std::vector<const LambdaSet*> ptrs;
  ptrs.reserve(sets.size());
  for (const auto& s : sets) ptrs.push_back(&s);
  return combine_sets(ptrs, false, {});
}

LambdaSet sign_set(const RatFun& f, Rel rel, const Rat& bound, const Rat& dlo,
                   const Rat& dhi, bool dlo_closed, bool dhi_closed) {
  LambdaSet domain = LambdaSet::interval(RealValue(dlo), RealValue(dhi),
                                         dlo_closed, dhi_closed);
  if (domain.empty()) return domain;

  Poly g = f.num() - bound * f.den();
  bool nonstrict = rel == Rel::Ge || rel == Rel::Le || rel == Rel::Eq;

  std::vector<RealValue> poles = isolate_real_roots(f.den(), dlo, dhi);
  if (g.is_zero()) {
    // f is constantly equal to the bound
    if (!nonstrict) return LambdaSet();
    return domain.minus_points(poles);
  }

  std::vector<RealValue> zeros = isolate_real_roots(g, dlo, dhi);

  std::vector<RealValue> bounds;
  bounds.emplace_back(dlo);
  bounds.emplace_back(dhi);
  for (const auto& v : poles) bounds.push_back(v);
  for (const auto& v : zeros) bounds.push_back(v);
  std::sort(bounds.begin(), bounds.end(),
            [](const RealValue& a, const RealValue& b) { return a < b; });
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](const RealValue& a, const RealValue& b) {
                             return a.compare(b) == 0;
                           }),
               bounds.end());

  auto holds_at = [&](const Rat& x) {
    auto val = f.eval(x);
    if (!val) return false;
    int c = cmp(*val, bound);
    switch (rel) {
      case Rel::Ge: return c >= 0;
      case Rel::Le: return c <= 0;
      case Rel::Eq: return c == 0;
      case Rel::Gt: return c > 0;
      case Rel::Lt: return c < 0;
    }
    return false;
  };
  auto among = [](const std::vector<RealValue>& vs, const RealValue& v) {
    for (const auto& u : vs)
      if (v.compare(u) == 0) return true;
    return false;
  };

  std::vector<LambdaPiece> raw;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const RealValue& v = bounds[i];
    if (domain.contains(v) && !among(poles, v)) {
      if (among(zeros, v)) {
        if (nonstrict) raw.push_back(LambdaPiece{v, v, true, true});
      } else if (v.is_exact() && holds_at(v.rat())) {
        // domain endpoints; zeros and poles are covered above and
        // irrational values cannot occur otherwise
        raw.push_back(LambdaPiece{v, v, true, true});
      }
    }
    if (i + 1 < bounds.size()) {
      Rat sample = strict_rational_between(bounds[i], bounds[i + 1]);
      if (domain.contains_rat(sample) && holds_at(sample))
        raw.push_back(LambdaPiece{bounds[i], bounds[i + 1], false, false});
    }
  }
  return LambdaSet::from_sorted_pieces(std::move(raw));
}

}  // namespace addmin
