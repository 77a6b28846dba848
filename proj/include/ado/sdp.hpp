#pragma once

#include <string>
#include <vector>

#include "ado/lp.hpp"

namespace ado {

// Convex program with scalar variables in [0,1] plus one symmetric PSD
// matrix block Z (a Gram matrix of unit-capped vectors): Z >= 0, Z_vv <=
// diag_ub, trace(Z) <= trace_ub. Rows are linear in the scalars and the
// entries of Z.
//
// Only one vector family ever needs the Gram block: in the outlier programs
// the x and y vectors appear solely through their squared norms, so each
// collapses to a scalar in [0,1]; the z vectors also appear through pairwise
// inner products, which is exactly what Z stores.
struct GramSdpModel {
  struct GramTerm {
    int i, j;      // 0-based, i <= j; the coefficient applies to Z_ij = Z_ji
    double coeff;
  };
  struct Row {
    std::vector<LpModel::Term> scalar_terms;
    std::vector<GramTerm> gram_terms;
    double rhs;  // >= rhs
  };

  std::vector<std::string> scalar_names;
  std::vector<double> scalar_obj;
  int gram_dim = 0;
  double trace_ub = 0.0;
  double diag_ub = 1.0;
  std::vector<Row> rows;

  int n_scalars() const { return static_cast<int>(scalar_names.size()); }
  int add_scalar(std::string name, double obj_coeff);
  std::string dump() const;
};

struct SdpResult {
  Assignment assignment;  // values = scalars, gram = Z row-major
  bool converged = false;
  double min_eigenvalue = 0.0;
  double max_linear_violation = 0.0;
  int rounds = 0;
  int cuts = 0;
};

// Outer approximation: an LP over (scalars, Z entries) seeded with the
// 2x2-minor cuts, refined by eigenvector cuts v'Zv >= 0 until the smallest
// eigenvalue of Z is >= -tol. Objective values are monotone lower bounds on
// the true optimum; on exhaustion the best iterate is returned with
// converged = false.
SdpResult sdp_solve(const GramSdpModel& model, double tol = 1e-4,
                    int round_limit = 500);

FeasibilityReport check_feasible(const GramSdpModel& model, const Assignment& a,
                                 double tol = 1e-6);

}  // namespace ado
