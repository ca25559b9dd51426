#pragma once

// Per-cell parametric solving. On a cell the eigen system is linear with
// lambda as a symbol: Cramer over the polynomial ring gives the generic
// curve x(lambda) = N(lambda)/D(lambda); the roots of D get a separate
// affine analysis (pencils). Families are the connected solution pieces.

#include <variant>

#include "addmin/cells.hpp"
#include "addmin/lambda_set.hpp"
#include "addmin/polyhedron.hpp"

namespace addmin {

struct Curve {
  LambdaSet lambda_set;        // one connected piece
  std::vector<RatFun> coords;  // size n; pinned coordinates are constant 1
};

struct Pencil {
  RealValue lambda_star;
  std::vector<Rat> base;                // particular solution, x-space
  std::vector<std::vector<Rat>> basis;  // null-space directions, x-space
  Polyhedron region;                    // over the basis parameters
  bool approx = false;  // consistency decided numerically at an irrational root
};

struct EigenFamily {
  CellIndex cell;
  std::variant<Curve, Pencil> body;

  bool is_curve() const { return std::holds_alternative<Curve>(body); }
  const Curve& curve() const { return std::get<Curve>(body); }
  const Pencil& pencil() const { return std::get<Pencil>(body); }
};

// D(lambda) = det(lambda I - Delta) over the free coordinates (monic with
// integer coefficients) and the Cramer numerators per free coordinate.
// Zero polynomial D and empty numerators when the cell has no free
// coordinates.
std::pair<Poly, std::vector<Poly>> char_and_cramer(const CellSystem& cell);

// Curve families: box, demand and pinned-row constraints intersected in
// lambda, roots of D and the all-coordinates-zero points removed.
std::vector<EigenFamily> generic_families(const CellSystem& cell);

// Pencil families at each root of D in [0, n].
std::vector<EigenFamily> singular_families(const CellSystem& cell);

struct CellSolveResult {
  std::vector<EigenFamily> families;
  int singular_roots_checked = 0;
};

// Full per-cell solve (curves, pencils, degenerate all-pinned cells).
CellSolveResult solve_cell(const CellSystem& cell);

struct FamilySample {
  Rat lambda;
  Rat lambda_err;  // 0 when lambda is exact
  std::vector<Rat> x;
};

// Deterministic seeded samples; every sample with lambda_err = 0 satisfies
// the family's defining equations exactly.
std::vector<FamilySample> family_sample(const EigenFamily& fam, int count,
                                        unsigned long seed);

}  // namespace addmin
