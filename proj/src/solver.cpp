#include "addmin/solver.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace addmin {

int resolve_thread_count(const SolveOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("ADDMIN_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

namespace {

SolveReport solve_common(const ProblemInstance& inst, Mode mode,
                         const SolveOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  inst.validate();

  SolveReport report;
  report.mode = mode;
  report.instance = inst;
  report.table = compute_Q_K(inst);

  bool constrained = mode == Mode::Constrained;
  if (constrained) {
    if (!inst.b) throw std::invalid_argument("demand vector required");
    if (!feasible_by_ones(inst)) {
      report.infeasible = true;
      return report;
    }
    compute_D_P(inst, report.table);
  }

  long total = constrained ? report.table.total_constrained_cells()
                           : report.table.total_eigen_cells();
  if (total > opts.max_cells && !opts.force)
    throw std::runtime_error(
        "cell count " + std::to_string(total) + " exceeds the guard of " +
        std::to_string(opts.max_cells) + "; pass force to override");
  report.stats.cells_enumerated = total;

  std::vector<CellSolveResult> results(static_cast<std::size_t>(total));
  if (opts.parallel) {
    int threads = resolve_thread_count(opts);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long ord = 0; ord < total; ++ord) {
      CellIndex idx = cell_index_from_ordinal(report.table, ord, constrained);
      CellSystem cell = constrained
                            ? build_cell_constrained(inst, report.table, idx)
                            : build_cell_eigen(inst, report.table, idx);
      results[static_cast<std::size_t>(ord)] = solve_cell(cell);
    }
  } else {
    for (long ord = 0; ord < total; ++ord) {
      CellIndex idx = cell_index_from_ordinal(report.table, ord, constrained);
      CellSystem cell = constrained
                            ? build_cell_constrained(inst, report.table, idx)
                            : build_cell_eigen(inst, report.table, idx);
      results[static_cast<std::size_t>(ord)] = solve_cell(cell);
    }
  }

  std::vector<LambdaSet> lambda_parts;
  for (auto& res : results) {
    report.stats.singular_roots_checked += res.singular_roots_checked;
    if (!res.families.empty()) ++report.stats.cells_nonempty;
    for (auto& fam : res.families) {
      if (fam.is_curve())
        lambda_parts.push_back(fam.curve().lambda_set);
      else
        lambda_parts.push_back(LambdaSet::point(fam.pencil().lambda_star));
      report.families.push_back(std::move(fam));
    }
  }
  report.lambda_set = union_lambda(lambda_parts);
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace

SolveReport solve_eigen(const ProblemInstance& inst, const SolveOptions& opts) {
  return solve_common(inst, Mode::Eigen, opts);
}

SolveReport solve_constrained(const ProblemInstance& inst,
                              const SolveOptions& opts) {
  return solve_common(inst, Mode::Constrained, opts);
}

namespace {

bool vector_in_box(const CellSystem& cell, const std::vector<Rat>& x) {
  for (int j = 0; j < cell.n(); ++j) {
    const Rat& v = x[static_cast<std::size_t>(j)];
    if (v < cell.box_lo[static_cast<std::size_t>(j)] ||
        v > cell.box_hi[static_cast<std::size_t>(j)])
      return false;
  }
  return true;
}

}  // namespace

std::optional<MembershipHit> membership(const SolveReport& report,
                                        const std::vector<Rat>& x) {
  const ProblemInstance& inst = report.instance;
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("vector arity mismatch");
  bool nonzero = false;
  for (const auto& v : x) {
    if (v < 0 || v > 1) throw std::invalid_argument("x outside [0,1]");
    if (v != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("x must be nonzero");
  if (report.infeasible) return std::nullopt;

  std::vector<Rat> rows = addmin_apply(inst, x);

  if (report.mode == Mode::Constrained)
    for (int i = 0; i < inst.n; ++i)
      if (rows[static_cast<std::size_t>(i)] < (*inst.b)[static_cast<std::size_t>(i)])
        return std::nullopt;

  // lambda from rows with x_i > 0; rows with x_i = 0 must read zero
  std::optional<Rat> lambda;
  for (int i = 0; i < inst.n; ++i) {
    const Rat& xi = x[static_cast<std::size_t>(i)];
    const Rat& ri = rows[static_cast<std::size_t>(i)];
    if (xi == 0) {
      if (ri != 0) return std::nullopt;
      continue;
    }
    Rat candidate = ri / xi;
    if (!lambda)
      lambda = candidate;
    else if (*lambda != candidate)
      return std::nullopt;
  }
  if (!lambda) return std::nullopt;

  for (std::size_t fi = 0; fi < report.families.size(); ++fi) {
    const EigenFamily& fam = report.families[fi];
    CellSystem cell =
        report.mode == Mode::Constrained
            ? build_cell_constrained(inst, report.table, fam.cell)
            : build_cell_eigen(inst, report.table, fam.cell);
    if (!vector_in_box(cell, x)) continue;
    if (fam.is_curve()) {
      const Curve& curve = fam.curve();
      if (!curve.lambda_set.contains_rat(*lambda)) continue;
      bool match = true;
      for (int j = 0; j < inst.n; ++j) {
        auto v = curve.coords[static_cast<std::size_t>(j)].eval(*lambda);
        if (!v || *v != x[static_cast<std::size_t>(j)]) {
          match = false;
          break;
        }
      }
      if (match) return MembershipHit{*lambda, fam.cell, fi};
    } else {
      const Pencil& pencil = fam.pencil();
      // rational x cannot sit on an irrational-lambda pencil
      if (!pencil.lambda_star.is_exact()) continue;
      if (pencil.lambda_star.rat() != *lambda) continue;
      bool match = true;
      for (int i = 0; i < inst.n && match; ++i) {
        Rat acc(0);
        for (int j = 0; j < inst.n; ++j) {
          Rat coeff(-cell.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          if (i == j) coeff += *lambda;
          acc += coeff * x[static_cast<std::size_t>(j)];
        }
        // pinned coordinates carry their a_ij inside c already; the
        // equation on the cell is (lambda I - Delta) x = c
        if (acc != cell.c[static_cast<std::size_t>(i)]) match = false;
      }
      if (match) return MembershipHit{*lambda, fam.cell, fi};
    }
  }
  return std::nullopt;
}

std::optional<MembershipHit> membership(const ProblemInstance& inst,
                                        const std::vector<Rat>& x, Mode mode,
                                        const SolveOptions& opts) {
  SolveReport report =
      mode == Mode::Eigen ? solve_eigen(inst, opts) : solve_constrained(inst, opts);
  return membership(report, x);
}

}  // namespace addmin
