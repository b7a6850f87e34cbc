#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/errors.hpp"

namespace spanner {

// Covering LP: minimize sum x_j subject to sum_{j in row} x_j >= 1 for every
// row, 0 <= x_j <= 1. Rows are variable-index sets (coefficients are 0/1).
class LpProblem {
 public:
  explicit LpProblem(int32_t n_vars = 0) : n_vars_(n_vars) {}

  int32_t n_vars() const { return n_vars_; }
  const std::vector<std::vector<int32_t>>& rows() const { return rows_; }

  // Adds a constraint; returns false if an identical row is already pooled.
  bool add_row(std::vector<int32_t> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.empty()) throw LpNumericalBreakdown("empty covering row is infeasible");
    uint64_t h = 0xcbf29ce484222325ULL;
    for (int32_t v : vars) {
      h ^= uint64_t(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    if (!hashes_.insert(h).second) return false;
    rows_.push_back(std::move(vars));
    return true;
  }

 private:
  int32_t n_vars_ = 0;
  std::vector<std::vector<int32_t>> rows_;
  std::unordered_set<uint64_t> hashes_;
};

struct FractionalSolution {
  std::vector<double> x;
  double objective = 0.0;
  int64_t iterations = 0;
};

namespace detail {

constexpr double kFeasTol = 1e-9;
constexpr double kObjTol = 1e-7;
constexpr double kPivotTol = 1e-10;

// Bounded-variable revised simplex with a dense explicit basis inverse.
// Standard form: [A | -I] [x; s] = 1, x in [0,1], s >= 0. The all-surplus
// basis with every x at its upper bound is feasible from the start, so no
// phase-1 is needed. Dantzig pricing normally; if the objective stalls the
// rule switches to Bland's, which guarantees termination.
class CoveringSimplex {
 public:
  CoveringSimplex(const std::vector<std::vector<int32_t>>& rows, int32_t nx,
                  const Deadline& deadline)
      : rows_(rows), nx_(nx), nr_(int32_t(rows.size())), deadline_(deadline) {
    cols_.resize(size_t(nx_));
    for (int32_t i = 0; i < nr_; ++i)
      for (int32_t j : rows_[size_t(i)]) cols_[size_t(j)].push_back(i);

    // variable layout: 0..nx-1 = x (bounds [0,1]), nx..nx+nr-1 = surplus
    binv_.assign(size_t(nr_) * size_t(nr_), 0.0);
    for (int32_t i = 0; i < nr_; ++i) binv_[idx(i, i)] = -1.0;  // B = -I
    basis_.resize(size_t(nr_));
    in_basis_.assign(size_t(nx_) + size_t(nr_), 0);
    at_upper_.assign(size_t(nx_) + size_t(nr_), 0);
    for (int32_t i = 0; i < nr_; ++i) {
      basis_[size_t(i)] = nx_ + i;
      in_basis_[size_t(nx_ + i)] = 1;
    }
    for (int32_t j = 0; j < nx_; ++j) at_upper_[size_t(j)] = 1;  // x = 1
    xb_.resize(size_t(nr_));
    for (int32_t i = 0; i < nr_; ++i)
      xb_[size_t(i)] = double(rows_[size_t(i)].size()) - 1.0;  // s_i = |row|-1
    y_.assign(size_t(nr_), 0.0);  // c_B = 0 initially
  }

  FractionalSolution run() {
    int64_t iters = 0;
    int64_t stall = 0;
    double last_obj = objective();
    bool bland = false;
    const int64_t max_iters = 2000 + 40ll * (int64_t(nx_) + int64_t(nr_));
    while (true) {
      if ((iters & 63) == 0) deadline_.check();
      int32_t enter = pick_entering(bland);
      if (enter < 0) break;
      if (!pivot(enter)) {
        if (!bland) {
          bland = true;  // retry the step with the safe rule
          continue;
        }
        throw LpNumericalBreakdown("no acceptable pivot");
      }
      ++iters;
      double obj = objective();
      if (obj < last_obj - kObjTol) {
        last_obj = obj;
        stall = 0;
        bland = false;
      } else if (++stall > 256) {
        bland = true;  // degeneracy guard: Bland's rule prevents cycling
      }
      if (iters > max_iters) throw LpNumericalBreakdown("iteration limit hit");
    }

    FractionalSolution sol;
    sol.iterations = iters;
    sol.x.assign(size_t(nx_), 0.0);
    for (int32_t j = 0; j < nx_; ++j)
      if (!in_basis_[size_t(j)]) sol.x[size_t(j)] = at_upper_[size_t(j)] ? 1.0 : 0.0;
    for (int32_t i = 0; i < nr_; ++i) {
      int32_t v = basis_[size_t(i)];
      if (v < nx_) sol.x[size_t(v)] = std::clamp(xb_[size_t(i)], 0.0, 1.0);
    }
    for (double v : sol.x) sol.objective += v;
    return sol;
  }

 private:
  size_t idx(int32_t r, int32_t c) const { return size_t(r) * size_t(nr_) + size_t(c); }

  double cost(int32_t var) const { return var < nx_ ? 1.0 : 0.0; }
  double upper(int32_t var) const {
    return var < nx_ ? 1.0 : std::numeric_limits<double>::infinity();
  }

  double objective() const {
    double obj = 0.0;
    for (int32_t j = 0; j < nx_; ++j)
      if (!in_basis_[size_t(j)] && at_upper_[size_t(j)]) obj += 1.0;
    for (int32_t i = 0; i < nr_; ++i)
      if (basis_[size_t(i)] < nx_) obj += xb_[size_t(i)];
    return obj;
  }

  double reduced_cost(int32_t var) const {
    if (var < nx_) {
      double ya = 0.0;
      for (int32_t i : cols_[size_t(var)]) ya += y_[size_t(i)];
      return 1.0 - ya;
    }
    return y_[size_t(var - nx_)];  // 0 - y^T(-e_i)
  }

  // Violation sign convention: nonbasic-at-lower wants d < 0, at-upper d > 0.
  int32_t pick_entering(bool bland) const {
    int32_t best = -1;
    double best_score = kObjTol;
    const int32_t total = nx_ + nr_;
    for (int32_t v = 0; v < total; ++v) {
      if (in_basis_[size_t(v)]) continue;
      double d = reduced_cost(v);
      double score = at_upper_[size_t(v)] ? d : -d;
      if (score <= best_score) continue;
      if (bland) return v;
      best_score = score;
      best = v;
    }
    return best;
  }

  // Column of the constraint matrix for `var` multiplied by B^-1.
  void fill_direction(int32_t var, std::vector<double>& w) const {
    w.assign(size_t(nr_), 0.0);
    if (var < nx_) {
      for (int32_t c : cols_[size_t(var)])
        for (int32_t i = 0; i < nr_; ++i) w[size_t(i)] += binv_[idx(i, c)];
    } else {
      int32_t c = var - nx_;
      for (int32_t i = 0; i < nr_; ++i) w[size_t(i)] = -binv_[idx(i, c)];
    }
  }

  bool pivot(int32_t enter) {
    fill_direction(enter, w_);
    const bool from_upper = at_upper_[size_t(enter)] != 0;
    // Displacement t >= 0 of the entering variable away from its bound moves
    // basic i by t * delta_i where delta_i = +w_i (from upper) / -w_i (lower).
    double t_best = upper(enter);  // bound-to-bound flip distance
    int32_t leave_pos = -1;
    uint8_t leave_to_upper = 0;
    for (int32_t i = 0; i < nr_; ++i) {
      double delta = from_upper ? w_[size_t(i)] : -w_[size_t(i)];
      int32_t bv = basis_[size_t(i)];
      double t;
      uint8_t to_upper;
      if (delta < -kPivotTol) {  // basic value decreasing toward 0
        t = xb_[size_t(i)] / (-delta);
        to_upper = 0;
      } else if (delta > kPivotTol && upper(bv) < kInfLp()) {
        t = (upper(bv) - xb_[size_t(i)]) / delta;
        to_upper = 1;
      } else {
        continue;
      }
      if (t < 0.0) t = 0.0;
      bool take = t < t_best - 1e-12;
      if (!take && leave_pos >= 0 && t < t_best + 1e-12 && bv < basis_[size_t(leave_pos)])
        take = true;  // tie toward the smallest basic index (anti-cycling)
      if (take) {
        t_best = std::min(t_best, t);
        leave_pos = i;
        leave_to_upper = to_upper;
      }
    }

    if (t_best >= kInfLp()) throw LpNumericalBreakdown("unbounded direction");

    for (int32_t i = 0; i < nr_; ++i)
      xb_[size_t(i)] += (from_upper ? t_best : -t_best) * w_[size_t(i)];

    if (leave_pos < 0) {
      at_upper_[size_t(enter)] = from_upper ? 0 : 1;  // bound flip, basis unchanged
      return true;
    }

    double piv = w_[size_t(leave_pos)];
    if (std::fabs(piv) < kPivotTol) return false;

    int32_t leave_var = basis_[size_t(leave_pos)];
    in_basis_[size_t(leave_var)] = 0;
    at_upper_[size_t(leave_var)] = leave_to_upper;
    in_basis_[size_t(enter)] = 1;
    basis_[size_t(leave_pos)] = enter;
    xb_[size_t(leave_pos)] = from_upper ? upper(enter) - t_best : t_best;

    // Row operations keep binv_ = B^-1 for the new basis.
    double* pr = &binv_[idx(leave_pos, 0)];
    double inv_piv = 1.0 / piv;
    for (int32_t c = 0; c < nr_; ++c) pr[c] *= inv_piv;
    for (int32_t i = 0; i < nr_; ++i) {
      if (i == leave_pos) continue;
      double f = w_[size_t(i)];
      if (f == 0.0) continue;
      double* ri = &binv_[idx(i, 0)];
      for (int32_t c = 0; c < nr_; ++c) ri[c] -= f * pr[c];
    }

    // Dual update: y' = y + d_enter * (row leave_pos of the new inverse),
    // with d_enter taken against the pre-pivot duals.
    double d_enter = reduced_cost(enter);
    if (d_enter != 0.0)
      for (int32_t c = 0; c < nr_; ++c) y_[size_t(c)] += d_enter * pr[c];

    if (++pivots_since_refresh_ >= 256) refresh();
    return true;
  }

  // Recompute basic values and duals directly from the inverse to stop
  // incremental float drift from accumulating.
  void refresh() {
    pivots_since_refresh_ = 0;
    std::vector<double> rhs(size_t(nr_), 1.0);
    for (int32_t j = 0; j < nx_; ++j) {
      if (in_basis_[size_t(j)] || !at_upper_[size_t(j)]) continue;
      for (int32_t i : cols_[size_t(j)]) rhs[size_t(i)] -= 1.0;
    }
    for (int32_t i = 0; i < nr_; ++i) {
      double acc = 0.0;
      const double* ri = &binv_[idx(i, 0)];
      for (int32_t c = 0; c < nr_; ++c) acc += ri[c] * rhs[size_t(c)];
      xb_[size_t(i)] = acc;
    }
    for (int32_t c = 0; c < nr_; ++c) {
      double acc = 0.0;
      for (int32_t i = 0; i < nr_; ++i)
        if (basis_[size_t(i)] < nx_) acc += binv_[idx(i, c)];
      y_[size_t(c)] = acc;
    }
  }

  static double kInfLp() { return std::numeric_limits<double>::infinity(); }

  const std::vector<std::vector<int32_t>>& rows_;
  int32_t nx_, nr_;
  const Deadline& deadline_;
  std::vector<std::vector<int32_t>> cols_;
  std::vector<double> binv_, xb_, y_, w_;
  std::vector<int32_t> basis_;
  std::vector<uint8_t> in_basis_, at_upper_;
  int32_t pivots_since_refresh_ = 0;
};

}  // namespace detail

// Solves the covering LP to optimality. Singleton rows are presolved (their
// variable is forced to 1 in every feasible point), rows they satisfy are
// dropped, and the simplex runs on the rest.
inline FractionalSolution lp_solve(const LpProblem& p,
                                   const Deadline& deadline = Deadline::never()) {
  const int32_t n = p.n_vars();
  std::vector<uint8_t> forced(size_t(n), 0);
  for (const auto& row : p.rows())
    if (row.size() == 1) forced[size_t(row[0])] = 1;

  std::vector<const std::vector<int32_t>*> live_rows;
  for (const auto& row : p.rows()) {
    bool satisfied = false;
    for (int32_t j : row)
      if (forced[size_t(j)]) {
        satisfied = true;
        break;
      }
    if (!satisfied) live_rows.push_back(&row);
  }

  FractionalSolution sol;
  sol.x.assign(size_t(n), 0.0);
  for (int32_t j = 0; j < n; ++j)
    if (forced[size_t(j)]) sol.x[size_t(j)] = 1.0;

  if (!live_rows.empty()) {
    // compress to the variables that still appear somewhere
    std::vector<int32_t> local(size_t(n), -1), back;
    std::vector<std::vector<int32_t>> rows;
    rows.reserve(live_rows.size());
    for (const auto* row : live_rows) {
      std::vector<int32_t> r;
      r.reserve(row->size());
      for (int32_t j : *row) {
        if (local[size_t(j)] < 0) {
          local[size_t(j)] = int32_t(back.size());
          back.push_back(j);
        }
        r.push_back(local[size_t(j)]);
      }
      rows.push_back(std::move(r));
    }
    detail::CoveringSimplex simplex(rows, int32_t(back.size()), deadline);
    FractionalSolution inner = simplex.run();
    sol.iterations = inner.iterations;
    for (size_t j = 0; j < back.size(); ++j) sol.x[size_t(back[j])] = inner.x[j];
  }

  for (double v : sol.x) sol.objective += v;
  return sol;
}

}  // namespace spanner
