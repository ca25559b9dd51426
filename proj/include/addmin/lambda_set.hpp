#pragma once

// LambdaSet: a finite union of disjoint intervals/points of the eigenvalue
// axis with open/closed endpoint flags. Endpoints are RealValues, so set
// algebra (union, intersection, point removal) is exact even when a curve
// range ends at an irrational breakpoint.

#include <vector>

#include "addmin/roots.hpp"

namespace addmin {

struct LambdaPiece {
  RealValue lo, hi;
  bool lo_closed = true, hi_closed = true;
  bool is_point() const { return lo.compare(hi) == 0; }
};

class LambdaSet {
 public:
  LambdaSet() = default;

  static LambdaSet point(RealValue v);
  // Empty result when the bounds cross, or when lo == hi with an open flag.
  static LambdaSet interval(RealValue lo, RealValue hi, bool lo_closed = true,
                            bool hi_closed = true);
  // Pieces must be sorted and pairwise disjoint; adjacent ones are merged.
  static LambdaSet from_sorted_pieces(std::vector<LambdaPiece> pieces);

  bool empty() const { return pieces_.empty(); }
  const std::vector<LambdaPiece>& pieces() const { return pieces_; }

  bool contains_rat(const Rat& x) const;
  bool contains(const RealValue& x) const;

  LambdaSet unite(const LambdaSet& other) const;
  LambdaSet intersect(const LambdaSet& other) const;
  LambdaSet minus_points(const std::vector<RealValue>& points) const;

  bool operator==(const LambdaSet& other) const;

 private:
  friend LambdaSet combine_sets(const std::vector<const LambdaSet*>& sets,
                                bool want_union,
                                const std::vector<RealValue>& removed);
  std::vector<LambdaPiece> pieces_;  // sorted, disjoint, maximal
};

LambdaSet union_lambda(const std::vector<LambdaSet>& sets);
LambdaSet intersect_lambda(const std::vector<LambdaSet>& sets);

enum class Rel { Ge, Le, Eq, Gt, Lt };

// Exactly {x in domain : f(x) rel bound}, poles of f excluded; endpoints
// closed iff the relation is non-strict and holds there exactly. The domain
// interval has rational ends.
LambdaSet sign_set(const RatFun& f, Rel rel, const Rat& bound, const Rat& dlo,
                   const Rat& dhi, bool dlo_closed = true,
                   bool dhi_closed = true);

}  // namespace addmin
