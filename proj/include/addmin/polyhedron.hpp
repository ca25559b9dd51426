#pragma once

// Exact H-representation polyhedra over Rat and Fourier-Motzkin
// feasibility with witness extraction. Strict rows are honored, which is
// how the zero-vector exclusion facet is expressed.

#include <functional>
#include <optional>
#include <vector>

#include "addmin/rat.hpp"

namespace addmin {

enum class RowRel { Le, Lt, Eq };

struct LinRow {
  std::vector<Rat> coeffs;
  RowRel rel = RowRel::Le;
  Rat rhs;
};

struct Polyhedron {
  int vars = 0;
  std::vector<LinRow> rows;

  // coeffs . x (rel) rhs
  void add(std::vector<Rat> coeffs, RowRel rel, Rat rhs);
  // lo <= x_j <= hi
  void add_box(int j, const Rat& lo, const Rat& hi);
  // sum_j x_j > 0
  void add_positive_sum();
};

struct FmResult {
  bool feasible = false;
  std::vector<Rat> witness;  // one interior-ish point when feasible
};

// Exact feasibility over the reals. Guard: at most 12 variables.
FmResult fm_feasible(const Polyhedron& poly);

// As above with a seeded choice of witness inside each back-substitution
// interval; sample 0 reproduces fm_feasible's midpoint witness.
FmResult fm_feasible_sampled(const Polyhedron& poly, unsigned long seed,
                             int sample);

}  // namespace addmin
