#pragma once

// Whole-problem solves: enumerate cells, solve each in parallel (or with
// the serial reference path), merge deterministically by cell ordinal.

#include "addmin/families.hpp"

namespace addmin {

enum class Mode { Eigen, Constrained };

struct SolveOptions {
  bool parallel = true;  // serial path kept as the reference implementation
  int threads = 0;       // 0: ADDMIN_THREADS env var, else OpenMP default
  long max_cells = 10000000;
  bool force = false;  // lift the max_cells guard
  unsigned long seed = 1;
};

struct SolveStats {
  long cells_enumerated = 0;
  long cells_nonempty = 0;
  long singular_roots_checked = 0;
  double wall_seconds = 0;
};

struct SolveReport {
  Mode mode = Mode::Eigen;
  ProblemInstance instance;
  BreakpointTable table;
  bool infeasible = false;  // constrained gate: all-ones vector fails
  std::vector<EigenFamily> families;
  LambdaSet lambda_set;
  SolveStats stats;
};

SolveReport solve_eigen(const ProblemInstance& inst, const SolveOptions& opts = {});

// Empty report (infeasible = true) when the all-ones gate fails.
SolveReport solve_constrained(const ProblemInstance& inst,
                              const SolveOptions& opts = {});

struct MembershipHit {
  Rat lambda;
  CellIndex cell;
  std::size_t family_index;
};

// Reverse lookup: is x an eigenvector reported by this solve, and of which
// family? x must be in [0,1]^n and nonzero.
std::optional<MembershipHit> membership(const SolveReport& report,
                                        const std::vector<Rat>& x);

std::optional<MembershipHit> membership(const ProblemInstance& inst,
                                        const std::vector<Rat>& x, Mode mode,
                                        const SolveOptions& opts = {});

int resolve_thread_count(const SolveOptions& opts);

}  // namespace addmin
