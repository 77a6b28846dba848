#pragma once

#include <cstdint>
#include <vector>

#include "ado/lp.hpp"
#include "ado/metric.hpp"
#include "ado/sdp.hpp"
#include "ado/tz.hpp"

namespace ado {

// Builders place the x block first (indices 0..n-1) so that roundings can
// read inclusion weights straight out of an Assignment.

// ---------------------------------------------------------------- LP_TZk --
struct TzkLp {
  LpModel lp;
  int n = 0, k = 0;
  // x_v^(i), i in 1..k-1
  int x_idx(Vertex v, int i) const { return (i - 1) * n + (v - 1); }
  // y_uv^(i), i in 1..k, ordered pairs including u = v
  int y_idx(Vertex u, Vertex v, int i) const {
    return (k - 1) * n + ((i - 1) * n + (u - 1)) * n + (v - 1);
  }
};

TzkLp build_lp_tzk(const MetricSpace& ms, int k);

// Indicator assignment of a chain; feasible with objective = tz_cost.
Assignment embed_integral_tzk(const MetricSpace& ms, const LevelChain& chain);

// The closed-form fractional point on the cycle instance, as an explicit
// assignment matching build_lp_tzk(gen_cycle(n), k).
Assignment cycle_fractional_solution(int n, int k);

// Same point in per-distance-class form. On the cycle every constraint row
// for pairs at equal distance is identical, so feasibility and the objective
// can be checked over distance classes; this scales to n where the explicit
// LP would not fit in memory. Tests cross-validate the two forms.
struct CycleCertificateProfile {
  int n = 0, k = 0;
  std::vector<double> x;                // x[i], i in 0..k; x[0]=1, x[k]=0
  std::vector<std::vector<double>> y;   // y[i-1][r], i in 1..k, r in 0..floor(n/2)
  double objective = 0.0;
};

CycleCertificateProfile cycle_certificate_profile(int n, int k);
// Exhaustive check over (level, distance class); returns worst slack
// (negative = violation beyond -tol would mean infeasible).
double cycle_certificate_worst_slack(const CycleCertificateProfile& profile);

// ----------------------------------------------------------------- LP_PR --
struct PrLp {
  LpModel lp;
  int n = 0;
  int x_idx(Vertex v) const { return v - 1; }
  int y_idx(Vertex u, Vertex v) const {  // unordered, u != v
    if (u > v) std::swap(u, v);
    return n + (u - 1) * (2 * n - u) / 2 + (v - u - 1);
  }
};

PrLp build_lp_pr(const MetricSpace& ms);

Assignment embed_integral_pr(const MetricSpace& ms, const std::vector<Vertex>& a);

// Distinct unions B_u(r) | B_v(d(u,v)-r) over integer r in [0, d(u,v)], one
// representative per constancy interval, duplicates removed (first
// occurrence kept). Each union is returned sorted ascending.
std::vector<std::vector<Vertex>> pair_ball_unions(const MetricSpace& ms,
                                                  Vertex u, Vertex v);

// -------------------------------------------------------------- LP_TZ2O --
struct Tz2oLp {
  LpModel lp;
  int n = 0, f = 0;
  int x_idx(Vertex v) const { return v - 1; }
  int z_idx(Vertex v) const { return n + (v - 1); }
  int y_idx(Vertex u, Vertex v) const {  // ordered, including u = v
    return 2 * n + (u - 1) * n + (v - 1);
  }
};

// Exists to demonstrate its failure mode (optimum 0 at f = n/2), not to
// round from.
Tz2oLp build_lp_tz2o(const MetricSpace& ms, int f);

// ------------------------------------------------------------- SDP models --
struct Tz2oSdp {
  GramSdpModel sdp;
  int n = 0, f = 0;
  int x_idx(Vertex v) const { return v - 1; }
  int y_idx(Vertex u, Vertex v) const { return n + (u - 1) * n + (v - 1); }
  int gram_idx(Vertex v) const { return v - 1; }
};

Tz2oSdp build_sdp_tz2o(const MetricSpace& ms, int f);

struct PrOSdp {
  GramSdpModel sdp;
  int n = 0, f = 0;
  int x_idx(Vertex v) const { return v - 1; }
  int y_idx(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return n + (u - 1) * (2 * n - u) / 2 + (v - u - 1);
  }
  int gram_idx(Vertex v) const { return v - 1; }
};

PrOSdp build_sdp_pro(const MetricSpace& ms, int f);

// -------------------------------------------------------------- rounding --
struct RoundingParams {
  std::uint64_t seed = 0;
  double epsilon = 0.25;  // module default for the outlier roundings
};

struct PrRounding {
  std::vector<Vertex> a;
  bool forced_fallback = false;
  double scale = 0.0;  // the ln-n multiplier actually applied
};

// Independent inclusion with probability min(4 ln n * x_v, 1); an empty
// result forces the single vertex with the largest x value.
PrRounding round_pr(const MetricSpace& ms, const Assignment& sol,
                    std::uint64_t seed);

struct OutlierSolution {
  std::vector<Vertex> a;
  std::vector<Vertex> f;
  std::int64_t cost = 0;
  bool forced_fallback = false;
  double scale = 0.0;
};

// A at rate (3 ln n / eps) * X_v, F by the threshold Z_vv >= 1/(1+eps);
// |F| <= (1+eps) f since trace(Z) <= f. Cost via tz2_cost_outliers with the
// realized |F| as the budget.
OutlierSolution round_tz2o(const MetricSpace& ms, const Assignment& sol,
                           const RoundingParams& params, int f);

// True-approximation variant: F = the f vertices with the largest Z_vv
// (ties to the lowest id), A as round_tz2o with the default epsilon.
OutlierSolution round_tz2o_topf(const MetricSpace& ms, const Assignment& sol,
                                int f, std::uint64_t seed);

// As round_tz2o but at rate 6 ln n / eps, evaluated by pr_cost_outliers.
OutlierSolution round_pro(const MetricSpace& ms, const Assignment& sol,
                          const RoundingParams& params, int f);

// Baseline landmark sampler (rate n^(-1/3)); not derived from any optimizer,
// used only as a random comparison point and for stretch sweeps.
std::vector<Vertex> sample_random_landmarks(int n, std::uint64_t seed);

// CSV log for rounding trials.
struct TrialLogRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int a_size = 0;
  int f_size = 0;
  std::int64_t cost = 0;
  double objective = 0.0;
  bool forced = false;
};

std::string trial_csv(const std::vector<TrialLogRow>& rows);

}  // namespace ado
