#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ado/metric.hpp"

namespace ado {

struct Infeasible : MetricError {
  using MetricError::MetricError;
};
struct Unbounded : MetricError {
  using MetricError::MetricError;
};
struct IterationLimit : MetricError {
  using MetricError::MetricError;
};
struct DimensionMismatch : MetricError {
  using MetricError::MetricError;
};

inline constexpr double kNoUpper = std::numeric_limits<double>::infinity();

// Linear program: minimize c.x subject to sparse rows a.x >= rhs and
// variable bounds 0 <= x <= upper (upper may be infinite).
struct LpModel {
  struct Term {
    int var;
    double coeff;
  };
  struct Row {
    std::vector<Term> terms;
    double rhs;
  };

  std::vector<std::string> names;
  std::vector<double> upper;
  std::vector<double> objective;
  std::vector<Row> rows;

  int n_vars() const { return static_cast<int>(names.size()); }
  int add_var(std::string name, double ub, double obj_coeff);
  void add_row(std::vector<Term> terms, double rhs);
  std::string dump() const;
};

// Candidate solution for either model family. For Gram-constrained models
// `gram` holds the symmetric matrix row-major with gram_dim rows.
struct Assignment {
  std::vector<double> values;
  double objective = 0.0;
  int gram_dim = 0;
  std::vector<double> gram;

  double gram_at(int i, int j) const { return gram[i * gram_dim + j]; }
};

struct FeasibilityReport {
  struct Violation {
    std::string what;
    double amount;
  };
  std::vector<Violation> violations;
  double max_violation = 0.0;
  bool ok() const { return violations.empty(); }
};

// Deterministic revised simplex, run on the dual (our models have many
// covering rows and few structural variables). Dantzig pricing with a Bland
// fallback after stalls, so it cannot cycle and identical inputs give
// bit-identical output.
Assignment lp_solve(const LpModel& model, double tol = 1e-9,
                    std::int64_t iter_limit = 500000);

FeasibilityReport check_feasible(const LpModel& model, const Assignment& a,
                                 double tol = 1e-6);

double eval_objective(const LpModel& model, const Assignment& a);

}  // namespace ado
