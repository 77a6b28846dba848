#include "ado/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ado {

int LpModel::add_var(std::string name, double ub, double obj_coeff) {
  names.push_back(std::move(name));
  upper.push_back(ub);
  objective.push_back(obj_coeff);
  return static_cast<int>(names.size()) - 1;
}

void LpModel::add_row(std::vector<Term> terms, double rhs) {
  rows.push_back({std::move(terms), rhs});
}

std::string LpModel::dump() const {
  std::ostringstream out;
  out << "vars " << n_vars() << '\n';
  for (int j = 0; j < n_vars(); ++j) {
    out << "  " << names[j] << " in [0, ";
    if (upper[j] == kNoUpper)
      out << "inf";
    else
      out << upper[j];
    out << "] obj " << objective[j] << '\n';
  }
  out << "rows " << rows.size() << '\n';
  for (const auto& row : rows) {
    out << " ";
    for (const auto& t : row.terms)
      out << ' ' << t.coeff << '*' << names[t.var];
    out << " >= " << row.rhs << '\n';
  }
  return out.str();
}

double eval_objective(const LpModel& model, const Assignment& a) {
  double obj = 0.0;
  for (int j = 0; j < model.n_vars(); ++j) obj += model.objective[j] * a.values[j];
  return obj;
}

FeasibilityReport check_feasible(const LpModel& model, const Assignment& a,
                                 double tol) {
  if (static_cast<int>(a.values.size()) != model.n_vars())
    throw DimensionMismatch("assignment has " + std::to_string(a.values.size()) +
                            " values, model has " + std::to_string(model.n_vars()));
  FeasibilityReport rep;
  auto flag = [&](std::string what, double amount) {
    rep.max_violation = std::max(rep.max_violation, amount);
    if (amount > tol) rep.violations.push_back({std::move(what), amount});
  };
  for (int j = 0; j < model.n_vars(); ++j) {
    flag("lower bound of " + model.names[j], -a.values[j]);
    if (model.upper[j] != kNoUpper)
      flag("upper bound of " + model.names[j], a.values[j] - model.upper[j]);
  }
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    double lhs = 0.0;
    for (const auto& t : model.rows[r].terms) lhs += t.coeff * a.values[t.var];
    flag("row " + std::to_string(r), model.rows[r].rhs - lhs);
  }
  return rep;
}

namespace {

// The solver works on the dual of
//     min c.x   s.t.  A x >= b,  0 <= x <= u,
// with finite upper bounds folded into A as rows -x_j >= -u_j. The dual in
// equality form is
//     min (-b).lam   s.t.  A^T lam + s = c,  lam, s >= 0,
// which has one row per primal variable, so the basis stays small. At a dual
// optimum the simplex multipliers (negated) are a primal optimal point.
class DualSimplex {
 public:
  DualSimplex(const LpModel& model, double tol, std::int64_t iter_limit)
      : model_(model), tol_(tol), iter_limit_(iter_limit) {}

  Assignment solve() {
    build();
    if (need_phase1_) run_phase(true);
    run_phase(false);
    return extract();
  }

 private:
  struct Column {
    std::vector<std::pair<int, double>> entries;  // (row, value), sorted by row
    double cost = 0.0;       // phase-2 cost
    bool artificial = false;
  };

  void build() {
    p_ = model_.n_vars();
    // Columns for primal rows, then for upper-bound rows, then slacks.
    for (const auto& row : model_.rows) {
      Column col;
      for (const auto& t : row.terms) col.entries.emplace_back(t.var, t.coeff);
      std::sort(col.entries.begin(), col.entries.end());
      // merge duplicate variables within one row
      std::vector<std::pair<int, double>> merged;
      for (auto& e : col.entries) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(e);
      }
      col.entries = std::move(merged);
      col.cost = -row.rhs;
      cols_.push_back(std::move(col));
    }
    for (int j = 0; j < p_; ++j)
      if (model_.upper[j] != kNoUpper) {
        Column col;
        col.entries.emplace_back(j, -1.0);
        col.cost = model_.upper[j];
        cols_.push_back(std::move(col));
      }
    slack_start_ = static_cast<int>(cols_.size());
    for (int j = 0; j < p_; ++j) {
      Column col;
      col.entries.emplace_back(j, 1.0);
      col.cost = 0.0;
      cols_.push_back(std::move(col));
    }

    rhs_ = model_.objective;  // b~ = c
    sign_.assign(p_, 1.0);
    need_phase1_ = false;
    for (int j = 0; j < p_; ++j)
      if (rhs_[j] < 0) {
        need_phase1_ = true;
        sign_[j] = -1.0;
        rhs_[j] = -rhs_[j];
      }
    if (need_phase1_) {
      for (auto& col : cols_)
        for (auto& e : col.entries) e.second *= sign_[e.first];
      artificial_start_ = static_cast<int>(cols_.size());
      for (int j = 0; j < p_; ++j) {
        Column col;
        col.entries.emplace_back(j, 1.0);
        col.cost = 0.0;
        col.artificial = true;
        cols_.push_back(std::move(col));
      }
      basis_.resize(p_);
      for (int j = 0; j < p_; ++j) basis_[j] = artificial_start_ + j;
    } else {
      artificial_start_ = static_cast<int>(cols_.size());
      basis_.resize(p_);
      for (int j = 0; j < p_; ++j) basis_[j] = slack_start_ + j;
    }
    binv_.assign(static_cast<std::size_t>(p_) * p_, 0.0);
    for (int j = 0; j < p_; ++j) binv_[j * p_ + j] = 1.0;
    xb_ = rhs_;
  }

  double col_cost(int c, bool phase1) const {
    if (phase1) return cols_[c].artificial ? 1.0 : 0.0;
    return cols_[c].cost;
  }

  double reduced_cost(int c, const std::vector<double>& pi, bool phase1) const {
    double r = col_cost(c, phase1);
    for (const auto& [row, val] : cols_[c].entries) r -= pi[row] * val;
    return r;
  }

  void compute_pi(std::vector<double>& pi, bool phase1) const {
    pi.assign(p_, 0.0);
    for (int t = 0; t < p_; ++t) {
      const double cb = col_cost(basis_[t], phase1);
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<std::size_t>(t) * p_];
      for (int r = 0; r < p_; ++r) pi[r] += cb * row[r];
    }
  }

  void column_direction(int c, std::vector<double>& d) const {
    d.assign(p_, 0.0);
    for (const auto& [row, val] : cols_[c].entries)
      for (int t = 0; t < p_; ++t)
        d[t] += binv_[static_cast<std::size_t>(t) * p_ + row] * val;
  }

  void refactor() {
    // Rebuild B^-1 by Gauss-Jordan with partial pivoting.
    std::vector<double> b(static_cast<std::size_t>(p_) * p_, 0.0);
    for (int t = 0; t < p_; ++t)
      for (const auto& [row, val] : cols_[basis_[t]].entries)
        b[static_cast<std::size_t>(row) * p_ + t] = val;
    std::vector<double> inv(static_cast<std::size_t>(p_) * p_, 0.0);
    for (int j = 0; j < p_; ++j) inv[static_cast<std::size_t>(j) * p_ + j] = 1.0;
    for (int col = 0; col < p_; ++col) {
      int piv = col;
      double best = std::abs(b[static_cast<std::size_t>(col) * p_ + col]);
      for (int r = col + 1; r < p_; ++r) {
        const double v = std::abs(b[static_cast<std::size_t>(r) * p_ + col]);
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best < 1e-13) throw MetricError("simplex basis became singular");
      if (piv != col)
        for (int j = 0; j < p_; ++j) {
          std::swap(b[static_cast<std::size_t>(piv) * p_ + j],
                    b[static_cast<std::size_t>(col) * p_ + j]);
          std::swap(inv[static_cast<std::size_t>(piv) * p_ + j],
                    inv[static_cast<std::size_t>(col) * p_ + j]);
        }
      const double pv = b[static_cast<std::size_t>(col) * p_ + col];
      for (int j = 0; j < p_; ++j) {
        b[static_cast<std::size_t>(col) * p_ + j] /= pv;
        inv[static_cast<std::size_t>(col) * p_ + j] /= pv;
      }
      for (int r = 0; r < p_; ++r) {
        if (r == col) continue;
        const double factor = b[static_cast<std::size_t>(r) * p_ + col];
        if (factor == 0.0) continue;
        for (int j = 0; j < p_; ++j) {
          b[static_cast<std::size_t>(r) * p_ + j] -=
              factor * b[static_cast<std::size_t>(col) * p_ + j];
          inv[static_cast<std::size_t>(r) * p_ + j] -=
              factor * inv[static_cast<std::size_t>(col) * p_ + j];
        }
      }
    }
    binv_ = std::move(inv);
    // xb = B^-1 rhs
    xb_.assign(p_, 0.0);
    for (int t = 0; t < p_; ++t) {
      const double* row = &binv_[static_cast<std::size_t>(t) * p_];
      double s = 0.0;
      for (int r = 0; r < p_; ++r) s += row[r] * rhs_[r];
      xb_[t] = s;
    }
  }

  void run_phase(bool phase1) {
    std::vector<double> pi, d;
    std::vector<char> in_basis(cols_.size(), 0);
    for (int t = 0; t < p_; ++t) in_basis[basis_[t]] = 1;

    int stall = 0;
    double last_obj = objective_value(phase1);
    for (std::int64_t iter = 0; iter < iter_limit_; ++iter) {
      compute_pi(pi, phase1);
      const bool bland = stall >= 50;
      int entering = -1;
      double best_r = -tol_;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (in_basis[c]) continue;
        if (cols_[c].artificial && !phase1) continue;
        const double r = reduced_cost(static_cast<int>(c), pi, phase1);
        if (r < best_r) {
          entering = static_cast<int>(c);
          best_r = r;
          if (bland) break;  // first eligible index
        }
      }
      if (entering < 0) {
        if (phase1 && objective_value(true) > 1e-7)
          throw Unbounded(
              "dual is infeasible: primal is unbounded (or infeasible)");
        if (!phase1 && need_phase1_)
          for (int t = 0; t < p_; ++t)
            if (cols_[basis_[t]].artificial && xb_[t] > 1e-7)
              throw MetricError("artificial variable stuck in basis");
        return;  // optimal for this phase
      }

      column_direction(entering, d);
      int leave = -1;
      double theta = 0.0;
      for (int t = 0; t < p_; ++t) {
        if (d[t] <= tol_) continue;
        const double ratio = std::max(xb_[t], 0.0) / d[t];
        if (leave < 0 || ratio < theta - 1e-12 ||
            (ratio < theta + 1e-12 && basis_[t] < basis_[leave])) {
          leave = t;
          theta = ratio;
        }
      }
      if (leave < 0) {
        if (phase1) throw MetricError("phase-1 subproblem unbounded");
        throw Infeasible("dual is unbounded: primal is infeasible");
      }

      // Pivot: update B^-1 and xb.
      const double piv = d[leave];
      double* lrow = &binv_[static_cast<std::size_t>(leave) * p_];
      for (int j = 0; j < p_; ++j) lrow[j] /= piv;
      xb_[leave] = theta;
      for (int t = 0; t < p_; ++t) {
        if (t == leave) continue;
        const double factor = d[t];
        if (factor == 0.0) continue;
        double* row = &binv_[static_cast<std::size_t>(t) * p_];
        for (int j = 0; j < p_; ++j) row[j] -= factor * lrow[j];
        xb_[t] -= factor * theta;
      }
      in_basis[basis_[leave]] = 0;
      in_basis[entering] = 1;
      basis_[leave] = entering;

      if ((iter + 1) % 500 == 0) refactor();

      const double obj = objective_value(phase1);
      if (obj < last_obj - 1e-12) {
        stall = 0;
        last_obj = obj;
      } else {
        ++stall;
      }
    }
    throw IterationLimit("simplex iteration limit reached");
  }

  double objective_value(bool phase1) const {
    double obj = 0.0;
    for (int t = 0; t < p_; ++t) obj += col_cost(basis_[t], phase1) * xb_[t];
    return obj;
  }

  Assignment extract() {
    std::vector<double> pi;
    compute_pi(pi, false);
    Assignment a;
    a.values.assign(p_, 0.0);
    for (int j = 0; j < p_; ++j) {
      double x = -pi[j] * sign_[j];
      if (std::abs(x) < 1e-11) x = 0.0;
      a.values[j] = x;
    }
    a.objective = eval_objective(model_, a);
    return a;
  }

  const LpModel& model_;
  double tol_;
  std::int64_t iter_limit_;

  int p_ = 0;
  int slack_start_ = 0;
  int artificial_start_ = 0;
  bool need_phase1_ = false;
  std::vector<Column> cols_;
  std::vector<double> rhs_;    // c of the primal
  std::vector<double> sign_;   // row flips applied for phase 1
  std::vector<int> basis_;
  std::vector<double> binv_;   // row-major p x p
  std::vector<double> xb_;
};

}  // namespace ado::(anonymous)

Assignment lp_solve(const LpModel& model, double tol, std::int64_t iter_limit) {
  if (model.n_vars() == 0) throw MetricError("empty model");
  DualSimplex solver(model, tol, iter_limit);
  return solver.solve();
}

}  // namespace ado
