#include "addmin/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace addmin {

void ProblemInstance::validate() const {
  if (n <= 0) throw std::invalid_argument("n: must be positive");
  if (static_cast<int>(A.size()) != n)
    throw std::invalid_argument("A: expected " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(A[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("A[" + std::to_string(i) + "]: expected " +
                                  std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) {
      const Rat& v = a(i, j);
      if (v < 0 || v > 1)
        throw std::invalid_argument("A[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "]: outside [0,1]");
    }
  }
  if (b) {
    if (static_cast<int>(b->size()) != n)
      throw std::invalid_argument("b: expected " + std::to_string(n) +
                                  " entries");
    for (int i = 0; i < n; ++i) {
      const Rat& v = (*b)[static_cast<std::size_t>(i)];
      if (v <= 0)
        throw std::invalid_argument("b[" + std::to_string(i) +
                                    "]: must be positive");
      if (v > n)
        throw std::invalid_argument("b[" + std::to_string(i) +
                                    "]: exceeds row maximum n");
    }
  }
}

long BreakpointTable::total_eigen_cells() const {
  long total = 1;
  for (int tj : t) {
    total *= tj + 1;
    if (total < 0) return std::numeric_limits<long>::max();
  }
  return total;
}

long BreakpointTable::total_constrained_cells() const {
  long total = 1;
  for (const auto& pj : P) {
    total *= static_cast<long>(pj.size());
    if (total < 0) return std::numeric_limits<long>::max();
  }
  return total;
}

BreakpointTable compute_Q_K(const ProblemInstance& inst) {
  BreakpointTable table;
  table.Q.resize(static_cast<std::size_t>(inst.n));
  table.t.resize(static_cast<std::size_t>(inst.n));
  for (int j = 0; j < inst.n; ++j) {
    std::vector<Rat> col{Rat(0), Rat(1)};
    for (int i = 0; i < inst.n; ++i) {
      const Rat& v = inst.a(i, j);
      if (v > 0 && v < 1) col.push_back(v);
    }
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    table.t[static_cast<std::size_t>(j)] = static_cast<int>(col.size()) - 2;
    table.Q[static_cast<std::size_t>(j)] = std::move(col);
  }
  return table;
}

bool feasible_by_ones(const ProblemInstance& inst) {
  if (!inst.b) throw std::invalid_argument("demand vector required");
  for (int i = 0; i < inst.n; ++i) {
    Rat row_sum(0);
    for (int j = 0; j < inst.n; ++j) row_sum += inst.a(i, j);
    if (row_sum < (*inst.b)[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<Rat> compute_alpha_check(const ProblemInstance& inst) {
  if (!inst.b) throw std::invalid_argument("demand vector required");
  std::vector<Rat> alpha(static_cast<std::size_t>(inst.n), Rat(0));
  for (int j = 0; j < inst.n; ++j) {
    Rat best(0);
    for (int i = 0; i < inst.n; ++i) {
      Rat rest(0);
      for (int k = 0; k < inst.n; ++k)
        if (k != j) rest += inst.a(i, k);
      Rat v = (*inst.b)[static_cast<std::size_t>(i)] - rest;
      if (v > best) best = v;
    }
    alpha[static_cast<std::size_t>(j)] = best;
  }
  return alpha;
}

void compute_D_P(const ProblemInstance& inst, BreakpointTable& table) {
  if (!inst.b) throw std::invalid_argument("demand vector required");
  if (!feasible_by_ones(inst))
    throw std::invalid_argument("infeasible instance: all-ones vector fails");
  table.alpha_check = compute_alpha_check(inst);
  table.n_star.clear();
  table.D.assign(static_cast<std::size_t>(inst.n), {});
  table.P.assign(static_cast<std::size_t>(inst.n), {});
  for (int j = 0; j < inst.n; ++j) {
    const Rat& alpha = table.alpha_check[static_cast<std::size_t>(j)];
    if (alpha == 1) {
      table.n_star.insert(j);
      table.D[static_cast<std::size_t>(j)] = {Rat(1)};
      table.P[static_cast<std::size_t>(j)] = {0};
      continue;
    }
    std::vector<Rat> col{alpha, Rat(1)};
    for (int i = 0; i < inst.n; ++i) {
      const Rat& v = inst.a(i, j);
      if (v > alpha && v < 1) col.push_back(v);
    }
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    std::vector<int> pj;
    for (int p = 1; p < static_cast<int>(col.size()); ++p) pj.push_back(p);
    table.D[static_cast<std::size_t>(j)] = std::move(col);
    table.P[static_cast<std::size_t>(j)] = std::move(pj);
  }
}

}  // namespace addmin
