#pragma once

// Cell materialization: a multi-index picks one breakpoint interval per
// coordinate, on which min(a_ij, x_j) is affine (either x_j or the constant
// a_ij). The induced linear system is what the parametric solver consumes.

#include "addmin/instance.hpp"

namespace addmin {

using CellIndex = std::vector<int>;  // k_j (eigen) or p_j (constrained), 1-based; 0 pins x_j = 1

struct CellSystem {
  CellIndex index;
  bool constrained = false;
  std::vector<std::vector<int>> delta;  // n x n, 0/1
  std::vector<Rat> c;                   // row constants from the a_ij branch
  std::vector<Rat> box_lo, box_hi;      // per coordinate; fixed coords have lo == hi == 1
  std::vector<bool> fixed;              // true for coordinates pinned to 1 (N*)
  std::vector<Rat> demand;              // b_i rows (empty in eigen mode)

  int n() const { return static_cast<int>(delta.size()); }
  int free_count() const;
  std::vector<int> free_coords() const;
};

CellSystem build_cell_eigen(const ProblemInstance& inst,
                            const BreakpointTable& table, const CellIndex& k);

CellSystem build_cell_constrained(const ProblemInstance& inst,
                                  const BreakpointTable& table,
                                  const CellIndex& p);

// Row-wise sum_j min(a_ij, x_j); exact. Pre: x in [0,1]^n.
std::vector<Rat> addmin_apply(const ProblemInstance& inst,
                              const std::vector<Rat>& x);

// Lexicographic enumeration (last coordinate fastest), matching the order
// k = (1,1), (1,2), ..., used throughout reports.
CellIndex cell_index_from_ordinal(const BreakpointTable& table, long ordinal,
                                  bool constrained);

// Cells whose box contains x (shared faces make this 1..2^n cells).
std::vector<CellIndex> cells_containing(const BreakpointTable& table,
                                        const std::vector<Rat>& x,
                                        bool constrained);

}  // namespace addmin
