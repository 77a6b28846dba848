#include "ado/sdp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ado {

int GramSdpModel::add_scalar(std::string name, double obj_coeff) {
  scalar_names.push_back(std::move(name));
  scalar_obj.push_back(obj_coeff);
  return static_cast<int>(scalar_names.size()) - 1;
}

std::string GramSdpModel::dump() const {
  std::ostringstream out;
  out << "scalars " << n_scalars() << '\n';
  for (int j = 0; j < n_scalars(); ++j)
    out << "  " << scalar_names[j] << " in [0,1] obj " << scalar_obj[j] << '\n';
  out << "gram dim " << gram_dim << " trace<=" << trace_ub << " diag<="
      << diag_ub << '\n';
  out << "rows " << rows.size() << '\n';
  for (const auto& row : rows) {
    out << " ";
    for (const auto& t : row.scalar_terms)
      out << ' ' << t.coeff << '*' << scalar_names[t.var];
    for (const auto& g : row.gram_terms)
      out << ' ' << g.coeff << "*Z(" << g.i << ',' << g.j << ')';
    out << " >= " << row.rhs << '\n';
  }
  return out.str();
}

namespace {

// Variable layout of the outer LP: scalars, then diagonal entries z_ii, then
// shifted off-diagonal entries w_ij = Z_ij + 1 in [0,2] (the shift keeps all
// LP variables non-negative).
struct OuterLayout {
  int n_scalars = 0;
  int dim = 0;
  int diag_start = 0;
  int off_start = 0;

  int z_diag(int i) const { return diag_start + i; }
  int w_off(int i, int j) const {  // requires i < j
    return off_start + (i * (2 * dim - i - 1)) / 2 + (j - i - 1);
  }
};

LpModel build_outer_lp(const GramSdpModel& m, OuterLayout* layout) {
  LpModel lp;
  layout->n_scalars = m.n_scalars();
  layout->dim = m.gram_dim;
  for (int j = 0; j < m.n_scalars(); ++j)
    lp.add_var(m.scalar_names[j], 1.0, m.scalar_obj[j]);
  layout->diag_start = lp.n_vars();
  for (int i = 0; i < m.gram_dim; ++i)
    lp.add_var("Z_" + std::to_string(i) + "_" + std::to_string(i), m.diag_ub,
               0.0);
  layout->off_start = lp.n_vars();
  for (int i = 0; i < m.gram_dim; ++i)
    for (int j = i + 1; j < m.gram_dim; ++j)
      lp.add_var("W_" + std::to_string(i) + "_" + std::to_string(j), 2.0, 0.0);

  for (const auto& row : m.rows) {
    std::vector<LpModel::Term> terms = row.scalar_terms;
    double rhs = row.rhs;
    for (const auto& g : row.gram_terms) {
      if (g.i == g.j) {
        terms.push_back({layout->z_diag(g.i), g.coeff});
      } else {
        terms.push_back({layout->w_off(g.i, g.j), g.coeff});
        rhs += g.coeff;  // c*Z_ij = c*w_ij - c
      }
    }
    lp.add_row(std::move(terms), rhs);
  }

  // trace(Z) <= trace_ub
  {
    std::vector<LpModel::Term> terms;
    for (int i = 0; i < m.gram_dim; ++i) terms.push_back({layout->z_diag(i), -1.0});
    lp.add_row(std::move(terms), -m.trace_ub);
  }
  // Seed cuts: all 2x2 minors, z_ii + z_jj +- 2 Z_ij >= 0.
  for (int i = 0; i < m.gram_dim; ++i)
    for (int j = i + 1; j < m.gram_dim; ++j) {
      lp.add_row({{layout->z_diag(i), 1.0},
                  {layout->z_diag(j), 1.0},
                  {layout->w_off(i, j), 2.0}},
                 2.0);
      lp.add_row({{layout->z_diag(i), 1.0},
                  {layout->z_diag(j), 1.0},
                  {layout->w_off(i, j), -2.0}},
                 -2.0);
    }
  return lp;
}

Eigen::MatrixXd extract_gram(const OuterLayout& layout, const Assignment& lp_sol) {
  Eigen::MatrixXd z(layout.dim, layout.dim);
  for (int i = 0; i < layout.dim; ++i) {
    z(i, i) = lp_sol.values[layout.z_diag(i)];
    for (int j = i + 1; j < layout.dim; ++j) {
      const double v = lp_sol.values[layout.w_off(i, j)] - 1.0;
      z(i, j) = v;
      z(j, i) = v;
    }
  }
  return z;
}

}  // namespace

SdpResult sdp_solve(const GramSdpModel& model, double tol, int round_limit) {
  if (model.gram_dim <= 0) throw MetricError("gram dimension must be positive");
  OuterLayout layout;
  LpModel lp = build_outer_lp(model, &layout);

  SdpResult result;
  for (int round = 1; round <= round_limit; ++round) {
    result.rounds = round;
    const Assignment lp_sol = lp_solve(lp);
    const Eigen::MatrixXd z = extract_gram(layout, lp_sol);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(z);
    const Eigen::VectorXd& evals = eig.eigenvalues();
    result.min_eigenvalue = evals(0);

    result.assignment.values.assign(lp_sol.values.begin(),
                                    lp_sol.values.begin() + layout.n_scalars);
    result.assignment.gram_dim = layout.dim;
    result.assignment.gram.assign(
        static_cast<std::size_t>(layout.dim) * layout.dim, 0.0);
    for (int i = 0; i < layout.dim; ++i)
      for (int j = 0; j < layout.dim; ++j)
        result.assignment.gram[i * layout.dim + j] = z(i, j);
    result.assignment.objective = 0.0;
    for (int j = 0; j < layout.n_scalars; ++j)
      result.assignment.objective +=
          model.scalar_obj[j] * result.assignment.values[j];

    if (evals(0) >= -tol) {
      result.converged = true;
      return result;
    }

    // One cut per sufficiently negative eigenvector, at most 8 per round.
    int added = 0;
    for (int e = 0; e < layout.dim && added < 8; ++e) {
      if (evals(e) >= -tol) break;
      const Eigen::VectorXd v = eig.eigenvectors().col(e);
      std::vector<LpModel::Term> terms;
      double rhs = 0.0;
      for (int i = 0; i < layout.dim; ++i) {
        const double vii = v(i) * v(i);
        if (vii > 1e-14) terms.push_back({layout.z_diag(i), vii});
        for (int j = i + 1; j < layout.dim; ++j) {
          const double vij = 2.0 * v(i) * v(j);
          if (std::abs(vij) > 1e-14) {
            terms.push_back({layout.w_off(i, j), vij});
            rhs += vij;
          }
        }
      }
      lp.add_row(std::move(terms), rhs);
      ++result.cuts;
      ++added;
    }
  }
  return result;  // round_limit exhausted; best iterate, converged = false
}

FeasibilityReport check_feasible(const GramSdpModel& model, const Assignment& a,
                                 double tol) {
  if (static_cast<int>(a.values.size()) != model.n_scalars() ||
      a.gram_dim != model.gram_dim)
    throw DimensionMismatch("assignment does not match Gram model");

  FeasibilityReport rep;
  auto flag = [&](std::string what, double amount) {
    rep.max_violation = std::max(rep.max_violation, amount);
    if (amount > tol) rep.violations.push_back({std::move(what), amount});
  };
  for (int j = 0; j < model.n_scalars(); ++j) {
    flag("lower bound of " + model.scalar_names[j], -a.values[j]);
    flag("upper bound of " + model.scalar_names[j], a.values[j] - 1.0);
  }
  double trace = 0.0;
  for (int i = 0; i < model.gram_dim; ++i) {
    trace += a.gram_at(i, i);
    flag("diag bound Z_" + std::to_string(i), a.gram_at(i, i) - model.diag_ub);
  }
  flag("trace bound", trace - model.trace_ub);
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    double lhs = 0.0;
    for (const auto& t : model.rows[r].scalar_terms)
      lhs += t.coeff * a.values[t.var];
    for (const auto& g : model.rows[r].gram_terms)
      lhs += g.coeff * a.gram_at(g.i, g.j);
    flag("row " + std::to_string(r), model.rows[r].rhs - lhs);
  }

  Eigen::MatrixXd z(model.gram_dim, model.gram_dim);
  for (int i = 0; i < model.gram_dim; ++i)
    for (int j = 0; j < model.gram_dim; ++j) z(i, j) = a.gram_at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(z);
  flag("psd cone", -eig.eigenvalues()(0));
  return rep;
}

}  // namespace ado
