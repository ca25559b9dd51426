#include "addmin/cells.hpp"

#include <stdexcept>
#include <string>

namespace addmin {

int CellSystem::free_count() const {
  int f = 0;
  for (bool fx : fixed)
    if (!fx) ++f;
  return f;
}

std::vector<int> CellSystem::free_coords() const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j)
    if (!fixed[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

namespace {

// delta_ij = 1 when a_ij >= box_hi_j, 0 when a_ij <= box_lo_j. The
// breakpoint construction guarantees one of the two holds; ties at the
// upper face take the x_j branch.
CellSystem assemble(const ProblemInstance& inst, const CellIndex& index,
                    std::vector<Rat> lo, std::vector<Rat> hi,
                    std::vector<bool> fixed, bool constrained) {
  const int n = inst.n;
  CellSystem cell;
  cell.index = index;
  cell.constrained = constrained;
  cell.box_lo = std::move(lo);
  cell.box_hi = std::move(hi);
  cell.fixed = std::move(fixed);
  cell.delta.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n), 0));
  cell.c.assign(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& a = inst.a(i, j);
      if (cell.fixed[static_cast<std::size_t>(j)]) {
        // x_j = 1, so min(a_ij, x_j) = a_ij lands in the constant
        cell.c[static_cast<std::size_t>(i)] += a;
        continue;
      }
      if (a >= cell.box_hi[static_cast<std::size_t>(j)]) {
        cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      } else if (a <= cell.box_lo[static_cast<std::size_t>(j)]) {
        cell.c[static_cast<std::size_t>(i)] += a;
      } else {
        throw std::logic_error("matrix entry strictly inside a cell box");
      }
    }
  }
  if (constrained) cell.demand = *inst.b;
  return cell;
}

}  // namespace

CellSystem build_cell_eigen(const ProblemInstance& inst,
                            const BreakpointTable& table, const CellIndex& k) {
  const int n = inst.n;
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("cell index arity mismatch");
  std::vector<Rat> lo, hi;
  for (int j = 0; j < n; ++j) {
    int kj = k[static_cast<std::size_t>(j)];
    const auto& qj = table.Q[static_cast<std::size_t>(j)];
    if (kj < 1 || kj >= static_cast<int>(qj.size()))
      throw std::invalid_argument("cell index out of range in column " +
                                  std::to_string(j + 1));
    lo.push_back(qj[static_cast<std::size_t>(kj - 1)]);
    hi.push_back(qj[static_cast<std::size_t>(kj)]);
  }
  return assemble(inst, k, std::move(lo), std::move(hi),
                  std::vector<bool>(static_cast<std::size_t>(n), false), false);
}

CellSystem build_cell_constrained(const ProblemInstance& inst,
                                  const BreakpointTable& table,
                                  const CellIndex& p) {
  const int n = inst.n;
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("cell index arity mismatch");
  if (table.D.empty())
    throw std::invalid_argument("constrained table not computed");
  std::vector<Rat> lo, hi;
  std::vector<bool> fixed(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    int pj = p[static_cast<std::size_t>(j)];
    const auto& dj = table.D[static_cast<std::size_t>(j)];
    if (table.n_star.count(j)) {
      if (pj != 0)
        throw std::invalid_argument("pinned column expects index 0 at column " +
                                    std::to_string(j + 1));
      fixed[static_cast<std::size_t>(j)] = true;
      lo.push_back(Rat(1));
      hi.push_back(Rat(1));
      continue;
    }
    if (pj < 1 || pj >= static_cast<int>(dj.size()))
      throw std::invalid_argument("cell index out of range in column " +
                                  std::to_string(j + 1));
    lo.push_back(dj[static_cast<std::size_t>(pj - 1)]);
    hi.push_back(dj[static_cast<std::size_t>(pj)]);
  }
  return assemble(inst, p, std::move(lo), std::move(hi), std::move(fixed), true);
}

std::vector<Rat> addmin_apply(const ProblemInstance& inst,
                              const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("vector arity mismatch");
  for (const auto& v : x)
    if (v < 0 || v > 1) throw std::invalid_argument("x outside [0,1]");
  std::vector<Rat> out(static_cast<std::size_t>(inst.n), Rat(0));
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      const Rat& a = inst.a(i, j);
      const Rat& v = x[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] += a < v ? a : v;
    }
  return out;
}

CellIndex cell_index_from_ordinal(const BreakpointTable& table, long ordinal,
                                  bool constrained) {
  const int n = static_cast<int>(table.Q.size());
  CellIndex idx(static_cast<std::size_t>(n), 0);
  for (int j = n - 1; j >= 0; --j) {
    if (constrained) {
      const auto& pj = table.P[static_cast<std::size_t>(j)];
      long size = static_cast<long>(pj.size());
      idx[static_cast<std::size_t>(j)] = pj[static_cast<std::size_t>(ordinal % size)];
      ordinal /= size;
    } else {
      long size = table.eigen_choices(j);
      idx[static_cast<std::size_t>(j)] = static_cast<int>(ordinal % size) + 1;
      ordinal /= size;
    }
  }
  return idx;
}

std::vector<CellIndex> cells_containing(const BreakpointTable& table,
                                        const std::vector<Rat>& x,
                                        bool constrained) {
  const int n = static_cast<int>(table.Q.size());
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Rat& v = x[static_cast<std::size_t>(j)];
    if (constrained && table.n_star.count(j)) {
      if (v == 1) choices[static_cast<std::size_t>(j)].push_back(0);
      continue;
    }
    const auto& grid = constrained ? table.D[static_cast<std::size_t>(j)]
                                   : table.Q[static_cast<std::size_t>(j)];
    for (int k = 1; k < static_cast<int>(grid.size()); ++k)
      if (grid[static_cast<std::size_t>(k - 1)] <= v &&
          v <= grid[static_cast<std::size_t>(k)])
        choices[static_cast<std::size_t>(j)].push_back(k);
    if (choices[static_cast<std::size_t>(j)].empty()) return {};
  }
  std::vector<CellIndex> out{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<CellIndex> next;
    for (const auto& prefix : out)
      for (int k : choices[static_cast<std::size_t>(j)]) {
        CellIndex e = prefix;
        e.push_back(k);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace addmin
