#include "addmin/families.hpp"

#include <random>
#include <stdexcept>

namespace addmin {

namespace {

// Bareiss fraction-free determinant; consumes its argument.
Poly poly_det(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(Rat(1));
  int sign = 1;
  Poly prev = Poly::constant(Rat(1));
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly();
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                   m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                       m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Poly::div_exact(num, prev);
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  Poly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

std::vector<std::vector<Poly>> lambda_matrix(const CellSystem& cell,
                                             const std::vector<int>& free) {
  const int f = static_cast<int>(free.size());
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(f),
                                   std::vector<Poly>(static_cast<std::size_t>(f)));
  for (int r = 0; r < f; ++r)
    for (int s = 0; s < f; ++s) {
      int i = free[static_cast<std::size_t>(r)];
      int j = free[static_cast<std::size_t>(s)];
      Rat d(-cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          i == j ? Poly{d, Rat(1)} : Poly::constant(d);
    }
  return m;
}

}  // namespace

std::pair<Poly, std::vector<Poly>> char_and_cramer(const CellSystem& cell) {
  std::vector<int> free = cell.free_coords();
  const int f = static_cast<int>(free.size());
  if (f == 0) return {Poly(), {}};
  Poly d = poly_det(lambda_matrix(cell, free));
  std::vector<Poly> numerators;
  numerators.reserve(static_cast<std::size_t>(f));
  for (int s = 0; s < f; ++s) {
    auto m = lambda_matrix(cell, free);
    for (int r = 0; r < f; ++r)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          Poly::constant(cell.c[static_cast<std::size_t>(
              free[static_cast<std::size_t>(r)])]);
    numerators.push_back(poly_det(std::move(m)));
  }
  return {std::move(d), std::move(numerators)};
}

namespace {

// Constraint rows of pinned coordinates, as polynomials over the curve:
// sum_j delta_ij N_j(lambda) + (c_i - lambda) D(lambda) = 0.
std::vector<Poly> pinned_row_polys(const CellSystem& cell, const Poly& d,
                                   const std::vector<Poly>& nums,
                                   const std::vector<int>& free) {
  std::vector<Poly> rows;
  for (int i = 0; i < cell.n(); ++i) {
    if (!cell.fixed[static_cast<std::size_t>(i)]) continue;
    Poly acc;
    for (std::size_t s = 0; s < free.size(); ++s)
      if (cell.delta[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(free[s])])
        acc = acc + nums[s];
    acc = acc + Poly{cell.c[static_cast<std::size_t>(i)], Rat(-1)} * d;
    rows.push_back(std::move(acc));
  }
  return rows;
}

// Demand row i over the curve: sum_j delta_ij N_j + (c_i - b_i) D >= 0.
Poly demand_row_poly(const CellSystem& cell, const Poly& d,
                     const std::vector<Poly>& nums,
                     const std::vector<int>& free, int i) {
  Poly acc;
  for (std::size_t s = 0; s < free.size(); ++s)
    if (cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(free[s])])
      acc = acc + nums[s];
  acc = acc + Poly::constant(cell.c[static_cast<std::size_t>(i)] -
                             cell.demand[static_cast<std::size_t>(i)]) *
                  d;
  return acc;
}

}  // namespace

std::vector<EigenFamily> generic_families(const CellSystem& cell) {
  std::vector<int> free = cell.free_coords();
  const int f = static_cast<int>(free.size());
  std::vector<EigenFamily> out;
  if (f == 0) return out;

  auto [d, nums] = char_and_cramer(cell);
  const Rat dom_hi(cell.n());
  const Rat dom_lo(0);

  bool all_zero = true;
  for (const auto& num : nums)
    if (!num.is_zero()) all_zero = false;
  bool has_pinned = cell.free_count() < cell.n();
  if (all_zero && !has_pinned) return out;  // the curve is identically theta

  std::vector<LambdaSet> constraints;
  for (int s = 0; s < f; ++s) {
    RatFun xs(nums[static_cast<std::size_t>(s)], d);
    int j = free[static_cast<std::size_t>(s)];
    constraints.push_back(sign_set(xs, Rel::Ge, cell.box_lo[static_cast<std::size_t>(j)],
                                   dom_lo, dom_hi));
    constraints.push_back(sign_set(xs, Rel::Le, cell.box_hi[static_cast<std::size_t>(j)],
                                   dom_lo, dom_hi));
  }
  for (const auto& row : pinned_row_polys(cell, d, nums, free))
    constraints.push_back(sign_set(RatFun(row, d), Rel::Eq, Rat(0), dom_lo, dom_hi));
  if (!cell.demand.empty())
    for (int i = 0; i < cell.n(); ++i)
      constraints.push_back(sign_set(
          RatFun(demand_row_poly(cell, d, nums, free, i), d), Rel::Ge, Rat(0),
          dom_lo, dom_hi));

  LambdaSet lam = intersect_lambda(constraints);
  if (lam.empty()) return out;

  std::vector<RealValue> removed = isolate_real_roots(d, dom_lo, dom_hi);
  if (!has_pinned) {
    // remove lambda values where every coordinate vanishes
    Poly common;
    for (const auto& num : nums) common = Poly::gcd(common, num);
    if (!common.is_zero() && common.degree() >= 1)
      for (auto& r : isolate_real_roots(common, dom_lo, dom_hi))
        removed.push_back(std::move(r));
  }
  lam = lam.minus_points(removed);

  std::vector<RatFun> coords(static_cast<std::size_t>(cell.n()),
                             RatFun::constant(Rat(1)));
  for (int s = 0; s < f; ++s)
    coords[static_cast<std::size_t>(free[static_cast<std::size_t>(s)])] =
        RatFun(nums[static_cast<std::size_t>(s)], d);

  for (const auto& piece : lam.pieces()) {
    EigenFamily fam;
    fam.cell = cell.index;
    Curve curve;
    curve.lambda_set = LambdaSet::interval(piece.lo, piece.hi, piece.lo_closed,
                                           piece.hi_closed);
    curve.coords = coords;
    fam.body = std::move(curve);
    out.push_back(std::move(fam));
  }
  return out;
}

namespace {

struct AffineSolution {
  bool consistent = false;
  std::vector<Rat> particular;             // over free coordinates
  std::vector<std::vector<Rat>> null_basis;  // columns over free coordinates
};

// Gauss-Jordan over the rationals. With a threshold, entries of magnitude
// <= threshold are treated as zero (numeric consistency at refined
// irrational roots).
AffineSolution solve_affine(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs,
                            const Rat& threshold) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  auto is_zero = [&](const Rat& v) { return rat_abs(v) <= threshold; };

  std::vector<int> pivot_col_of_row;
  std::vector<bool> col_is_pivot(static_cast<std::size_t>(cols), false);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(r)]);
    std::swap(rhs[static_cast<std::size_t>(pr)], rhs[static_cast<std::size_t>(r)]);
    Rat piv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= piv;
    rhs[static_cast<std::size_t>(r)] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat factor = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      rhs[static_cast<std::size_t>(i)] -= factor * rhs[static_cast<std::size_t>(r)];
    }
    pivot_col_of_row.push_back(c);
    col_is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }
  AffineSolution sol;
  for (int i = r; i < rows; ++i)
    if (!is_zero(rhs[static_cast<std::size_t>(i)])) return sol;  // inconsistent
  sol.consistent = true;
  sol.particular.assign(static_cast<std::size_t>(cols), Rat(0));
  for (int i = 0; i < r; ++i)
    sol.particular[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] =
        rhs[static_cast<std::size_t>(i)];
  for (int c = 0; c < cols; ++c) {
    if (col_is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<Rat> dir(static_cast<std::size_t>(cols), Rat(0));
    dir[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < r; ++i)
      dir[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] =
          -m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    sol.null_basis.push_back(std::move(dir));
  }
  return sol;
}

// Full system at a fixed lambda: free rows (lambda I - Delta) x = c, pinned
// rows sum_j delta_ij x_j = lambda - c_i.
void system_at_lambda(const CellSystem& cell, const std::vector<int>& free,
                      const Rat& lambda, std::vector<std::vector<Rat>>& m,
                      std::vector<Rat>& rhs) {
  const int f = static_cast<int>(free.size());
  m.clear();
  rhs.clear();
  for (int i = 0; i < cell.n(); ++i) {
    std::vector<Rat> row(static_cast<std::size_t>(f), Rat(0));
    for (int s = 0; s < f; ++s) {
      int j = free[static_cast<std::size_t>(s)];
      Rat v(-cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (i == j) v += lambda;
      row[static_cast<std::size_t>(s)] = v;
    }
    if (cell.fixed[static_cast<std::size_t>(i)]) {
      // pinned row: x_i = 1, only the delta part is variable
      for (int s = 0; s < f; ++s) {
        int j = free[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] =
            Rat(cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      m.push_back(std::move(row));
      rhs.push_back(lambda - cell.c[static_cast<std::size_t>(i)]);
    } else {
      m.push_back(std::move(row));
      rhs.push_back(cell.c[static_cast<std::size_t>(i)]);
    }
  }
}

Polyhedron pencil_region(const CellSystem& cell, const std::vector<int>& free,
                         const std::vector<Rat>& particular,
                         const std::vector<std::vector<Rat>>& basis) {
  const int f = static_cast<int>(free.size());
  const int m = static_cast<int>(basis.size());
  Polyhedron region;
  region.vars = m;
  auto coeff_of = [&](int s) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(m), Rat(0));
    for (int k = 0; k < m; ++k)
      coeffs[static_cast<std::size_t>(k)] =
          basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
    return coeffs;
  };
  for (int s = 0; s < f; ++s) {
    int j = free[static_cast<std::size_t>(s)];
    auto coeffs = coeff_of(s);
    // lo_j <= particular_s + coeffs . t <= hi_j
    std::vector<Rat> up = coeffs;
    region.add(up, RowRel::Le,
               cell.box_hi[static_cast<std::size_t>(j)] -
                   particular[static_cast<std::size_t>(s)]);
    for (auto& v : coeffs) v = -v;
    region.add(coeffs, RowRel::Le,
               particular[static_cast<std::size_t>(s)] -
                   cell.box_lo[static_cast<std::size_t>(j)]);
  }
  if (!cell.demand.empty()) {
    for (int i = 0; i < cell.n(); ++i) {
      Rat constant = cell.c[static_cast<std::size_t>(i)];
      std::vector<Rat> coeffs(static_cast<std::size_t>(m), Rat(0));
      for (int s = 0; s < f; ++s) {
        int j = free[static_cast<std::size_t>(s)];
        if (!cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          continue;
        constant += particular[static_cast<std::size_t>(s)];
        for (int k = 0; k < m; ++k)
          coeffs[static_cast<std::size_t>(k)] +=
              basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      }
      // constant + coeffs . t >= b_i
      for (auto& v : coeffs) v = -v;
      region.add(std::move(coeffs), RowRel::Le,
                 constant - cell.demand[static_cast<std::size_t>(i)]);
    }
  }
  // exclude theta: sum of all coordinates stays positive
  {
    Rat constant(cell.n() - f);  // pinned coordinates contribute 1 each
    std::vector<Rat> coeffs(static_cast<std::size_t>(m), Rat(0));
    for (int s = 0; s < f; ++s) {
      constant += particular[static_cast<std::size_t>(s)];
      for (int k = 0; k < m; ++k)
        coeffs[static_cast<std::size_t>(k)] +=
            basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
    }
    for (auto& v : coeffs) v = -v;
    region.add(std::move(coeffs), RowRel::Lt, constant);
  }
  return region;
}

std::optional<Pencil> pencil_at_root(const CellSystem& cell,
                                     const std::vector<int>& free,
                                     const RealValue& root) {
  Rat lambda;
  Rat threshold(0);
  bool approx = !root.is_exact();
  if (root.is_exact()) {
    lambda = root.rat();
  } else {
    Rat width = rat(1, 1000000) / 1000000;  // 1e-12
    lambda = root.approx(width).first;
    threshold = rat(1, 1000000000L);  // 1e-9
  }
  std::vector<std::vector<Rat>> m;
  std::vector<Rat> rhs;
  system_at_lambda(cell, free, lambda, m, rhs);
  AffineSolution sol = solve_affine(m, rhs, threshold);
  if (!sol.consistent) return std::nullopt;
  if (approx) {
    // residual check of the recovered particular solution
    Rat worst(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < sol.particular.size(); ++j)
        acc += m[i][j] * sol.particular[j];
      Rat res = rat_abs(acc - rhs[i]);
      if (res > worst) worst = res;
    }
    if (worst > rat(1, 1000000000L)) return std::nullopt;
  }

  Polyhedron region = pencil_region(cell, free, sol.particular, sol.null_basis);
  if (!fm_feasible(region).feasible) return std::nullopt;

  Pencil pencil;
  pencil.lambda_star = root;
  pencil.approx = approx;
  pencil.base.assign(static_cast<std::size_t>(cell.n()), Rat(1));
  for (std::size_t s = 0; s < free.size(); ++s)
    pencil.base[static_cast<std::size_t>(free[s])] = sol.particular[s];
  for (const auto& dir : sol.null_basis) {
    std::vector<Rat> full(static_cast<std::size_t>(cell.n()), Rat(0));
    for (std::size_t s = 0; s < free.size(); ++s)
      full[static_cast<std::size_t>(free[s])] = dir[s];
    pencil.basis.push_back(std::move(full));
  }
  pencil.region = std::move(region);
  return pencil;
}

}  // namespace

std::vector<EigenFamily> singular_families(const CellSystem& cell) {
  std::vector<int> free = cell.free_coords();
  std::vector<EigenFamily> out;
  if (free.empty()) return out;
  auto [d, nums] = char_and_cramer(cell);
  (void)nums;
  for (const auto& root : isolate_real_roots(d, Rat(0), Rat(cell.n()))) {
    auto pencil = pencil_at_root(cell, free, root);
    if (!pencil) continue;
    EigenFamily fam;
    fam.cell = cell.index;
    fam.body = std::move(*pencil);
    out.push_back(std::move(fam));
  }
  return out;
}

CellSolveResult solve_cell(const CellSystem& cell) {
  CellSolveResult result;
  std::vector<int> free = cell.free_coords();
  if (free.empty()) {
    // fully pinned cell: x = (1,...,1), lambda must match every row value
    const Rat& lambda = cell.c[0];
    for (const auto& ci : cell.c)
      if (ci != lambda) return result;
    if (!cell.demand.empty())
      for (int i = 0; i < cell.n(); ++i)
        if (cell.c[static_cast<std::size_t>(i)] <
            cell.demand[static_cast<std::size_t>(i)])
          return result;
    EigenFamily fam;
    fam.cell = cell.index;
    Pencil pencil;
    pencil.lambda_star = RealValue(lambda);
    pencil.base.assign(static_cast<std::size_t>(cell.n()), Rat(1));
    pencil.region.vars = 0;
    fam.body = std::move(pencil);
    result.families.push_back(std::move(fam));
    return result;
  }

  for (auto& fam : generic_families(cell)) result.families.push_back(std::move(fam));

  auto [d, nums] = char_and_cramer(cell);
  (void)nums;
  auto roots = isolate_real_roots(d, Rat(0), Rat(cell.n()));
  result.singular_roots_checked = static_cast<int>(roots.size());
  for (const auto& root : roots) {
    auto pencil = pencil_at_root(cell, free, root);
    if (!pencil) continue;
    EigenFamily fam;
    fam.cell = cell.index;
    fam.body = std::move(*pencil);
    result.families.push_back(std::move(fam));
  }
  return result;
}

namespace {

Rat unit_sample(std::mt19937_64& rng) {
  return rat(static_cast<long>(rng() % 1001), 1000);
}

}  // namespace

std::vector<FamilySample> family_sample(const EigenFamily& fam, int count,
                                        unsigned long seed) {
  std::vector<FamilySample> out;
  std::mt19937_64 rng(seed);
  if (fam.is_curve()) {
    const Curve& curve = fam.curve();
    const auto& pieces = curve.lambda_set.pieces();
    if (pieces.empty()) throw std::invalid_argument("family is empty");
    for (int s = 0; s < count; ++s) {
      const auto& piece = pieces[static_cast<std::size_t>(s) % pieces.size()];
      FamilySample sample;
      if (piece.is_point()) {
        if (piece.lo.is_exact()) {
          sample.lambda = piece.lo.rat();
          sample.lambda_err = 0;
        } else {
          Rat width = rat(1, 1000000) / 1000000;
          auto [mid, err] = piece.lo.approx(width);
          sample.lambda = mid;
          sample.lambda_err = err;
        }
      } else {
        Rat anchor = strict_rational_between(piece.lo, piece.hi);
        Rat a = piece.lo.is_exact() && piece.lo_closed
                    ? piece.lo.rat()
                    : strict_rational_between(piece.lo, RealValue(anchor));
        Rat b = piece.hi.is_exact() && piece.hi_closed
                    ? piece.hi.rat()
                    : strict_rational_between(RealValue(anchor), piece.hi);
        sample.lambda = a + (b - a) * unit_sample(rng);
        sample.lambda_err = 0;
      }
      for (const auto& coord : curve.coords) {
        auto v = coord.eval(sample.lambda);
        if (!v) throw std::logic_error("curve sample landed on a pole");
        sample.x.push_back(*v);
      }
      out.push_back(std::move(sample));
    }
    return out;
  }

  const Pencil& pencil = fam.pencil();
  Rat lambda, lambda_err(0);
  if (pencil.lambda_star.is_exact()) {
    lambda = pencil.lambda_star.rat();
  } else {
    Rat width = rat(1, 1000000) / 1000000;
    auto [mid, err] = pencil.lambda_star.approx(width);
    lambda = mid;
    lambda_err = err;
  }
  int wanted = pencil.basis.empty() ? 1 : count;
  for (int s = 0; s < wanted; ++s) {
    auto fm = fm_feasible_sampled(pencil.region, seed + 1, s);
    if (!fm.feasible) throw std::logic_error("pencil region became infeasible");
    FamilySample sample;
    sample.lambda = lambda;
    sample.lambda_err = lambda_err;
    sample.x = pencil.base;
    for (std::size_t k = 0; k < pencil.basis.size(); ++k)
      for (std::size_t j = 0; j < sample.x.size(); ++j)
        sample.x[j] += fm.witness[k] * pencil.basis[k][j];
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace addmin
