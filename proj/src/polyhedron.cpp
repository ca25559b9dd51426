#include "addmin/polyhedron.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace addmin {

void Polyhedron::add(std::vector<Rat> coeffs, RowRel rel, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != vars)
    throw std::invalid_argument("row arity mismatch");
  rows.push_back(LinRow{std::move(coeffs), rel, std::move(rhs)});
}

void Polyhedron::add_box(int j, const Rat& lo, const Rat& hi) {
  std::vector<Rat> up(static_cast<std::size_t>(vars), Rat(0));
  up[static_cast<std::size_t>(j)] = 1;
  add(up, RowRel::Le, hi);
  std::vector<Rat> down(static_cast<std::size_t>(vars), Rat(0));
  down[static_cast<std::size_t>(j)] = -1;
  add(down, RowRel::Le, -lo);
}

void Polyhedron::add_positive_sum() {
  // sum x_j > 0  <=>  -sum x_j < 0
  std::vector<Rat> coeffs(static_cast<std::size_t>(vars), Rat(-1));
  add(std::move(coeffs), RowRel::Lt, Rat(0));
}

namespace {

struct WorkRow {
  std::vector<Rat> coeffs;  // a . x <= / < rhs
  bool strict = false;
  Rat rhs;
};

// scale so the first nonzero coefficient has magnitude 1
void normalize(WorkRow& r) {
  for (const auto& c : r.coeffs) {
    if (c != 0) {
      Rat s = rat_abs(c);
      for (auto& v : r.coeffs) v /= s;
      r.rhs /= s;
      return;
    }
  }
}

bool row_less(const WorkRow& a, const WorkRow& b) {
  if (a.strict != b.strict) return a.strict < b.strict;
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.coeffs < b.coeffs;
}

bool row_eq(const WorkRow& a, const WorkRow& b) {
  return a.strict == b.strict && a.rhs == b.rhs && a.coeffs == b.coeffs;
}

// true: row trivially holds; throws nothing; sets *contradiction when the
// all-zero row is violated
bool constant_row(const WorkRow& r, bool* contradiction) {
  for (const auto& c : r.coeffs)
    if (c != 0) return false;
  bool ok = r.strict ? r.rhs > 0 : r.rhs >= 0;
  if (!ok) *contradiction = true;
  return true;
}

struct Stage {
  int var = -1;
  std::vector<WorkRow> rows;  // rows mentioning var, pre-elimination
};

struct Trace {
  bool feasible = false;
  int vars = 0;
  std::vector<Stage> stages;  // elimination order
};

Trace eliminate(const Polyhedron& poly) {
  if (poly.vars > 12)
    throw std::invalid_argument("fm_feasible: more than 12 variables");
  Trace trace;
  trace.vars = poly.vars;

  std::vector<WorkRow> rows;
  bool contradiction = false;
  for (const auto& r : poly.rows) {
    WorkRow w{r.coeffs, r.rel == RowRel::Lt, r.rhs};
    if (r.rel == RowRel::Eq) {
      WorkRow neg;
      neg.coeffs.reserve(w.coeffs.size());
      for (const auto& c : w.coeffs) neg.coeffs.push_back(-c);
      neg.rhs = -w.rhs;
      neg.strict = false;
      w.strict = false;
      if (!constant_row(neg, &contradiction)) {
        normalize(neg);
        rows.push_back(std::move(neg));
      }
    }
    if (!constant_row(w, &contradiction)) {
      normalize(w);
      rows.push_back(std::move(w));
    }
    if (contradiction) return trace;
  }

  std::vector<int> remaining;
  for (int j = 0; j < poly.vars; ++j) remaining.push_back(j);

  while (!remaining.empty()) {
    // eliminate the variable with the fewest pos*neg combinations
    int best = -1;
    long best_cost = 0;
    for (int v : remaining) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        const Rat& c = r.coeffs[static_cast<std::size_t>(v)];
        if (c > 0) ++pos;
        else if (c < 0) ++neg;
      }
      long cost = pos * neg;
      if (best == -1 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    int v = best;
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));

    Stage stage;
    stage.var = v;
    std::vector<WorkRow> keep;
    std::vector<const WorkRow*> pos, neg;
    for (auto& r : rows) {
      const Rat& c = r.coeffs[static_cast<std::size_t>(v)];
      if (c > 0) pos.push_back(&r);
      else if (c < 0) neg.push_back(&r);
      else keep.push_back(r);
    }
    for (const auto* p : pos) stage.rows.push_back(*p);
    for (const auto* q : neg) stage.rows.push_back(*q);

    for (const auto* p : pos)
      for (const auto* q : neg) {
        const Rat& cp = p->coeffs[static_cast<std::size_t>(v)];
        const Rat& cq = q->coeffs[static_cast<std::size_t>(v)];
        WorkRow comb;
        comb.strict = p->strict || q->strict;
        comb.coeffs.resize(p->coeffs.size());
        for (std::size_t j = 0; j < comb.coeffs.size(); ++j)
          comb.coeffs[j] = p->coeffs[j] / cp - q->coeffs[j] / cq;
        comb.coeffs[static_cast<std::size_t>(v)] = 0;
        comb.rhs = p->rhs / cp - q->rhs / cq;
        if (constant_row(comb, &contradiction)) {
          if (contradiction) return trace;
          continue;
        }
        normalize(comb);
        keep.push_back(std::move(comb));
      }

    std::sort(keep.begin(), keep.end(), row_less);
    keep.erase(std::unique(keep.begin(), keep.end(), row_eq), keep.end());
    if (keep.size() > 200000)
      throw std::runtime_error("fm_feasible: row blow-up");
    rows = std::move(keep);
    trace.stages.push_back(std::move(stage));
  }
  trace.feasible = true;
  return trace;
}

// back-substitute in reverse elimination order; pick picks a point in
// [0,1] steering where inside each bound interval the witness lands
std::vector<Rat> back_substitute(const Trace& trace,
                                 const std::function<Rat()>& pick) {
  std::vector<Rat> x(static_cast<std::size_t>(trace.vars), Rat(0));
  for (auto it = trace.stages.rbegin(); it != trace.stages.rend(); ++it) {
    int v = it->var;
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const auto& r : it->rows) {
      const Rat& cv = r.coeffs[static_cast<std::size_t>(v)];
      Rat rest = r.rhs;
      for (std::size_t j = 0; j < r.coeffs.size(); ++j)
        if (static_cast<int>(j) != v) rest -= r.coeffs[j] * x[j];
      Rat bound = rest / cv;
      if (cv > 0) {  // x_v <= bound
        if (!has_hi || bound < hi || (bound == hi && r.strict)) {
          hi = bound;
          hi_strict = r.strict;
          has_hi = true;
        }
      } else {  // x_v >= bound
        if (!has_lo || bound > lo || (bound == lo && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
          has_lo = true;
        }
      }
    }
    Rat u = pick();
    Rat val;
    if (has_lo && has_hi) {
      if (lo == hi)
        val = lo;  // consistency guarantees both non-strict here
      else
        val = lo + (hi - lo) * (Rat(1) + u * 2) / 4;  // inside (lo, hi)
    } else if (has_lo) {
      val = lo_strict ? lo + 1 + u : lo;
    } else if (has_hi) {
      val = hi_strict ? hi - 1 - u : hi;
    } else {
      val = 0;
    }
    x[static_cast<std::size_t>(v)] = val;
  }
  return x;
}

}  // namespace

FmResult fm_feasible(const Polyhedron& poly) {
  return fm_feasible_sampled(poly, 0, 0);
}

FmResult fm_feasible_sampled(const Polyhedron& poly, unsigned long seed,
                             int sample) {
  Trace trace = eliminate(poly);
  FmResult res;
  res.feasible = trace.feasible;
  if (!res.feasible) return res;
  if (sample == 0 && seed == 0) {
    res.witness = back_substitute(trace, [] { return Rat(1, 2); });
  } else {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(sample));
    res.witness = back_substitute(trace, [&rng] {
      return rat(static_cast<long>(rng() % 1000), 1000);
    });
  }
  return res;
}

}  // namespace addmin
