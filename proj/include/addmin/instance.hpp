#pragma once

// Problem instances over the addition-min algebra ([0,1], +, min) and the
// per-column breakpoint tables that turn the piecewise eigenproblem into a
// finite family of linear cells.

#include <optional>
#include <set>
#include <vector>

#include "addmin/rat.hpp"

namespace addmin {

struct ProblemInstance {
  int n = 0;
  std::vector<std::vector<Rat>> A;   // n x n, entries in [0,1]
  std::optional<std::vector<Rat>> b; // length n, entries > 0

  const Rat& a(int i, int j) const { return A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool has_demands() const { return b.has_value(); }

  // Throws std::invalid_argument naming the offending entry.
  void validate() const;
};

// Per column j:
//   Q[j]: 0 = q_0 < q_1 < ... < q_{t_j} < q_{t_j+1} = 1, the distinct interior
//         matrix entries plus both ends; eigen cells pick k_j in 1..t_j+1.
//   D[j]: alpha_check_j = d_0 < ... < d_{l_j} = 1 (constrained mode); columns
//         with alpha_check_j = 1 are pinned and get P_j = {0}.
struct BreakpointTable {
  std::vector<std::vector<Rat>> Q;
  std::vector<int> t;

  std::vector<Rat> alpha_check;
  std::set<int> n_star;
  std::vector<std::vector<Rat>> D;
  std::vector<std::vector<int>> P;  // valid cell indices per column (constrained)

  int eigen_choices(int j) const { return t[static_cast<std::size_t>(j)] + 1; }
  long total_eigen_cells() const;
  long total_constrained_cells() const;
};

// Q_j / t_j for every column (eigen decomposition).
BreakpointTable compute_Q_K(const ProblemInstance& inst);

// True iff the all-ones vector satisfies every demand row.
bool feasible_by_ones(const ProblemInstance& inst);

// alpha_check_j = max(0, max_i(b_i - sum_{k != j} a_ik)).
std::vector<Rat> compute_alpha_check(const ProblemInstance& inst);

// Extends a Q/K table with D_j, P_j, alpha_check, N*. Pre: demands present
// and feasible_by_ones holds.
void compute_D_P(const ProblemInstance& inst, BreakpointTable& table);

}  // namespace addmin
