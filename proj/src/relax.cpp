#include "ado/relax.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ado/pr.hpp"
#include "ado/rng.hpp"

namespace ado {

namespace {

std::string subscript(int a) { return std::to_string(a); }
std::string subscript(int a, int b) {
  return std::to_string(a) + "_" + std::to_string(b);
}

// Power of n used by the cycle certificate: n^(-(2^i - 1)/2^(k-1)).
double cycle_x_value(int n, int k, int i) {
  if (i <= 0) return 1.0;
  if (i >= k) return 0.0;
  const double expo =
      -(std::pow(2.0, i) - 1.0) / std::pow(2.0, k - 1);
  return std::pow(static_cast<double>(n), expo);
}

Dist cycle_dist(int n, Vertex u, Vertex v) {
  const Dist gap = std::abs(u - v);
  return std::min<Dist>(gap, n - gap);
}

}  // namespace

// ---------------------------------------------------------------- LP_TZk --

TzkLp build_lp_tzk(const MetricSpace& ms, int k) {
  if (k < 2) throw MetricError("LP_TZk needs k >= 2");
  TzkLp out;
  out.n = ms.n();
  out.k = k;
  LpModel& lp = out.lp;

  const int n = out.n;
  for (int i = 1; i <= k - 1; ++i)
    for (Vertex v = 1; v <= n; ++v)
      lp.add_var("x" + subscript(v) + "^" + subscript(i), 1.0, 0.0);
  for (int i = 1; i <= k; ++i)
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v)
        lp.add_var("y" + subscript(u, v) + "^" + subscript(i), kNoUpper, 1.0);

  // Chain ordering x^(i-1) >= x^(i); the ends x^(0)=1, x^(k)=0 are
  // substituted into the ball rows.
  for (int i = 2; i <= k - 1; ++i)
    for (Vertex v = 1; v <= n; ++v)
      lp.add_row({{out.x_idx(v, i - 1), 1.0}, {out.x_idx(v, i), -1.0}}, 0.0);

  for (int i = 1; i <= k; ++i)
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v) {
        std::vector<LpModel::Term> terms{{out.y_idx(u, v, i), 1.0}};
        double rhs = 0.0;
        if (i == 1)
          rhs += 1.0;  // x_v^(0) = 1
        else
          terms.push_back({out.x_idx(v, i - 1), -1.0});
        if (i <= k - 1)
          for (Vertex w : ball_closed(ms, u, ms.d(u, v)))
            terms.push_back({out.x_idx(w, i), 1.0});
        lp.add_row(std::move(terms), rhs);
      }
  return out;
}

Assignment embed_integral_tzk(const MetricSpace& ms, const LevelChain& chain) {
  validate_chain(ms, chain);
  const int n = ms.n();
  const int k = chain.k;
  TzkLp layout;
  layout.n = n;
  layout.k = k;

  Assignment a;
  a.values.assign((k - 1) * n + static_cast<std::size_t>(k) * n * n, 0.0);
  for (int i = 1; i <= k - 1; ++i)
    for (Vertex v : chain.levels[i]) a.values[layout.x_idx(v, i)] = 1.0;

  std::vector<int> drop(n + 1, 1);
  for (int i = 1; i <= k; ++i)
    for (Vertex v : chain.levels[i]) drop[v] = i + 1;
  for (Vertex u = 1; u <= n; ++u) {
    std::vector<Dist> min_at(k + 1, std::numeric_limits<Dist>::max() / 4);
    for (int i = 1; i <= k; ++i)
      for (Vertex w : chain.levels[i]) min_at[i] = std::min(min_at[i], ms.d(u, w));
    for (Vertex v = 1; v <= n; ++v) {
      const int i = drop[v];
      if (ms.d(u, v) < min_at[i]) {
        a.values[layout.y_idx(u, v, i)] = 1.0;
        a.objective += 1.0;
      }
    }
  }
  return a;
}

Assignment cycle_fractional_solution(int n, int k) {
  if (n < 4 || k < 2)
    throw MetricError("cycle certificate needs n >= 4, k >= 2");
  TzkLp layout;
  layout.n = n;
  layout.k = k;

  Assignment a;
  a.values.assign((k - 1) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(k) * n * n,
                  0.0);
  for (int i = 1; i <= k - 1; ++i) {
    const double xi = cycle_x_value(n, k, i);
    for (Vertex v = 1; v <= n; ++v) a.values[layout.x_idx(v, i)] = xi;
  }
  for (int i = 1; i <= k; ++i) {
    const double x_prev = cycle_x_value(n, k, i - 1);
    const double x_cur = cycle_x_value(n, k, i);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v) {
        const double y = std::max(
            0.0, x_prev - (2.0 * cycle_dist(n, u, v) + 1.0) * x_cur);
        a.values[layout.y_idx(u, v, i)] = y;
        a.objective += y;
      }
  }
  return a;
}

CycleCertificateProfile cycle_certificate_profile(int n, int k) {
  if (n < 4 || k < 2)
    throw MetricError("cycle certificate needs n >= 4, k >= 2");
  CycleCertificateProfile p;
  p.n = n;
  p.k = k;
  p.x.resize(k + 1);
  for (int i = 0; i <= k; ++i) p.x[i] = cycle_x_value(n, k, i);

  const int rmax = n / 2;
  p.y.assign(k, std::vector<double>(rmax + 1, 0.0));
  for (int i = 1; i <= k; ++i)
    for (int r = 0; r <= rmax; ++r)
      p.y[i - 1][r] = std::max(0.0, p.x[i - 1] - (2.0 * r + 1.0) * p.x[i]);

  // Ordered-pair multiplicities per distance class (r = 0 are the u = v
  // pairs; n/2 is hit once per vertex on even cycles, twice otherwise).
  auto weight = [&](int r) -> double {
    if (r == 0) return n;
    if (2 * r == n) return n;
    return 2.0 * n;
  };
  for (int i = 1; i <= k; ++i)
    for (int r = 0; r <= rmax; ++r) p.objective += weight(r) * p.y[i - 1][r];
  return p;
}

double cycle_certificate_worst_slack(const CycleCertificateProfile& p) {
  double worst = 0.0;
  // chain ordering
  for (int i = 1; i <= p.k; ++i)
    worst = std::min(worst, p.x[i - 1] - p.x[i]);
  const int rmax = p.n / 2;
  for (int i = 1; i <= p.k; ++i)
    for (int r = 0; r <= rmax; ++r) {
      const double ball = std::min<double>(2.0 * r + 1.0, p.n);
      worst = std::min(worst, p.y[i - 1][r] -
                                  (p.x[i - 1] - ball * p.x[i]));
      worst = std::min(worst, p.y[i - 1][r]);
    }
  return worst;
}

// ----------------------------------------------------------------- LP_PR --

std::vector<std::vector<Vertex>> pair_ball_unions(const MetricSpace& ms,
                                                  Vertex u, Vertex v) {
  const Dist dd = ms.d(u, v);
  // Candidate radii: points where B_u(r) grows or B_v(d-r) shrinks.
  std::set<Dist> cands{0};
  for (const auto& [dist, w] : ms.sorted_row(u)) {
    (void)w;
    if (dist >= 0 && dist <= dd) cands.insert(dist);
  }
  for (const auto& [dist, w] : ms.sorted_row(v)) {
    (void)w;
    const Dist r = dd - dist + 1;
    if (r >= 0 && r <= dd) cands.insert(r);
  }

  std::vector<std::vector<Vertex>> unions;
  std::set<std::vector<Vertex>> seen;
  for (Dist r : cands) {
    std::vector<Vertex> bu = ms.ball(u, r);
    std::vector<Vertex> bv = ms.ball(v, dd - r);
    std::vector<Vertex> un;
    std::set_union(bu.begin(), bu.end(), bv.begin(), bv.end(),
                   std::back_inserter(un));
    if (seen.insert(un).second) unions.push_back(std::move(un));
  }
  return unions;
}

PrLp build_lp_pr(const MetricSpace& ms) {
  PrLp out;
  out.n = ms.n();
  const int n = out.n;
  LpModel& lp = out.lp;
  for (Vertex v = 1; v <= n; ++v)
    lp.add_var("x" + subscript(v), 1.0, static_cast<double>(n));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      lp.add_var("y" + subscript(u, v), kNoUpper, 1.0);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      for (const auto& un : pair_ball_unions(ms, u, v)) {
        std::vector<LpModel::Term> terms{{out.y_idx(u, v), 1.0}};
        for (Vertex w : un) terms.push_back({out.x_idx(w), 1.0});
        lp.add_row(std::move(terms), 1.0);
      }
  return out;
}

Assignment embed_integral_pr(const MetricSpace& ms,
                             const std::vector<Vertex>& a_set) {
  if (a_set.empty()) throw EmptySet("embed_integral_pr needs a non-empty A");
  const int n = ms.n();
  PrLp layout;
  layout.n = n;

  Assignment a;
  a.values.assign(n + static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  std::vector<Dist> da(n + 1, std::numeric_limits<Dist>::max() / 4);
  for (Vertex w : a_set) {
    a.values[layout.x_idx(w)] = 1.0;
    a.objective += n;
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w : a_set) da[u] = std::min(da[u], ms.d(u, w));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (ms.d(u, v) < da[u] + da[v] - 1) {
        a.values[layout.y_idx(u, v)] = 1.0;
        a.objective += 1.0;
      }
  return a;
}

// -------------------------------------------------------------- LP_TZ2O --

Tz2oLp build_lp_tz2o(const MetricSpace& ms, int f) {
  const int n = ms.n();
  if (f < 0 || f > n) throw MetricError("outlier budget out of range");
  Tz2oLp out;
  out.n = n;
  out.f = f;
  LpModel& lp = out.lp;
  for (Vertex v = 1; v <= n; ++v)
    lp.add_var("x" + subscript(v), 1.0, static_cast<double>(n - f));
  for (Vertex v = 1; v <= n; ++v) lp.add_var("z" + subscript(v), 1.0, 0.0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      lp.add_var("y" + subscript(u, v), kNoUpper, 1.0);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<LpModel::Term> terms{{out.y_idx(u, v), 1.0}};
      if (u == v)
        terms.push_back({out.z_idx(u), 2.0});
      else {
        terms.push_back({out.z_idx(u), 1.0});
        terms.push_back({out.z_idx(v), 1.0});
      }
      for (Vertex w : ball_closed(ms, u, ms.d(u, v)))
        terms.push_back({out.x_idx(w), 1.0});
      lp.add_row(std::move(terms), 1.0);
    }
  {
    std::vector<LpModel::Term> terms;
    for (Vertex v = 1; v <= n; ++v) terms.push_back({out.z_idx(v), -1.0});
    lp.add_row(std::move(terms), -static_cast<double>(f));
  }
  return out;
}

// ------------------------------------------------------------- SDP models --

Tz2oSdp build_sdp_tz2o(const MetricSpace& ms, int f) {
  const int n = ms.n();
  if (f < 0 || f > n) throw MetricError("outlier budget out of range");
  Tz2oSdp out;
  out.n = n;
  out.f = f;
  GramSdpModel& m = out.sdp;
  m.gram_dim = n;
  m.trace_ub = f;
  m.diag_ub = 1.0;
  for (Vertex v = 1; v <= n; ++v)
    m.add_scalar("X" + subscript(v), static_cast<double>(n - f));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) m.add_scalar("Y" + subscript(u, v), 1.0);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      GramSdpModel::Row row;
      row.rhs = 1.0;
      row.scalar_terms.push_back({out.y_idx(u, v), 1.0});
      const int gi = std::min(out.gram_idx(u), out.gram_idx(v));
      const int gj = std::max(out.gram_idx(u), out.gram_idx(v));
      row.gram_terms.push_back({gi, gj, 1.0});
      for (Vertex w : ball_closed(ms, u, ms.d(u, v)))
        row.scalar_terms.push_back({out.x_idx(w), 1.0});
      m.rows.push_back(std::move(row));
    }
  return out;
}

PrOSdp build_sdp_pro(const MetricSpace& ms, int f) {
  const int n = ms.n();
  if (f < 0 || f > n) throw MetricError("outlier budget out of range");
  PrOSdp out;
  out.n = n;
  out.f = f;
  GramSdpModel& m = out.sdp;
  m.gram_dim = n;
  m.trace_ub = f;
  m.diag_ub = 1.0;
  for (Vertex v = 1; v <= n; ++v)
    m.add_scalar("X" + subscript(v), static_cast<double>(n - f));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      m.add_scalar("Y" + subscript(u, v), 1.0);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      for (const auto& un : pair_ball_unions(ms, u, v)) {
        GramSdpModel::Row row;
        row.rhs = 1.0;
        row.scalar_terms.push_back({out.y_idx(u, v), 1.0});
        row.gram_terms.push_back({out.gram_idx(u), out.gram_idx(v), 1.0});
        for (Vertex w : un) row.scalar_terms.push_back({out.x_idx(w), 1.0});
        m.rows.push_back(std::move(row));
      }
  return out;
}

// -------------------------------------------------------------- rounding --

namespace {

// Independent inclusion at min(scale * weight_v, 1); empty outcome falls
// back to the best-weight vertex among `allowed` (lowest id on ties).
std::vector<Vertex> round_independent(int n, const std::vector<double>& weights,
                                      double scale, std::uint64_t seed,
                                      const std::vector<char>& excluded,
                                      bool* forced) {
  Rng rng(seed);
  std::vector<Vertex> a;
  for (Vertex v = 1; v <= n; ++v) {
    const double p = std::min(scale * std::max(weights[v - 1], 0.0), 1.0);
    if (rng.bernoulli(p)) a.push_back(v);
  }
  *forced = false;
  bool usable = false;
  for (Vertex v : a)
    if (!excluded[v]) usable = true;
  if (!usable) {
    Vertex best = 0;
    double best_w = -1.0;
    for (Vertex v = 1; v <= n; ++v)
      if (!excluded[v] && weights[v - 1] > best_w) {
        best_w = weights[v - 1];
        best = v;
      }
    if (best != 0) {
      a.push_back(best);
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      *forced = true;
    }
  }
  return a;
}

}  // namespace

PrRounding round_pr(const MetricSpace& ms, const Assignment& sol,
                    std::uint64_t seed) {
  const int n = ms.n();
  PrRounding out;
  out.scale = 4.0 * std::log(static_cast<double>(n));
  std::vector<double> weights(sol.values.begin(), sol.values.begin() + n);
  std::vector<char> excluded(n + 1, 0);
  out.a = round_independent(n, weights, out.scale, seed, excluded,
                            &out.forced_fallback);
  return out;
}

namespace {

std::vector<Vertex> threshold_outliers(const Assignment& sol, int n,
                                       double epsilon) {
  std::vector<Vertex> f_set;
  const double threshold = 1.0 / (1.0 + epsilon);
  for (Vertex v = 1; v <= n; ++v)
    if (sol.gram_at(v - 1, v - 1) >= threshold) f_set.push_back(v);
  return f_set;
}

OutlierSolution round_outliers_common(const MetricSpace& ms,
                                      const Assignment& sol, double scale,
                                      std::vector<Vertex> f_set,
                                      std::uint64_t seed, bool pr_cost_mode) {
  const int n = ms.n();
  OutlierSolution out;
  out.scale = scale;
  out.f = std::move(f_set);
  std::vector<char> excluded(n + 1, 0);
  for (Vertex v : out.f) excluded[v] = 1;
  std::vector<double> weights(sol.values.begin(), sol.values.begin() + n);
  out.a = round_independent(n, weights, scale, seed, excluded,
                            &out.forced_fallback);
  const int realized = static_cast<int>(out.f.size());
  out.cost = pr_cost_mode ? pr_cost_outliers(ms, out.a, out.f, realized)
                          : tz2_cost_outliers(ms, out.a, out.f, realized);
  return out;
}

}  // namespace

OutlierSolution round_tz2o(const MetricSpace& ms, const Assignment& sol,
                           const RoundingParams& params, int f) {
  (void)f;  // the budget enters through the solution's trace bound
  const int n = ms.n();
  const double scale = 3.0 * std::log(static_cast<double>(n)) / params.epsilon;
  return round_outliers_common(ms, sol, scale,
                               threshold_outliers(sol, n, params.epsilon),
                               params.seed, /*pr_cost_mode=*/false);
}

OutlierSolution round_tz2o_topf(const MetricSpace& ms, const Assignment& sol,
                                int f, std::uint64_t seed) {
  const int n = ms.n();
  RoundingParams defaults;
  const double scale =
      3.0 * std::log(static_cast<double>(n)) / defaults.epsilon;
  std::vector<std::pair<double, Vertex>> by_z;
  for (Vertex v = 1; v <= n; ++v)
    by_z.emplace_back(-sol.gram_at(v - 1, v - 1), v);
  std::sort(by_z.begin(), by_z.end());
  std::vector<Vertex> f_set;
  for (int i = 0; i < f && i < n; ++i) f_set.push_back(by_z[i].second);
  std::sort(f_set.begin(), f_set.end());
  return round_outliers_common(ms, sol, scale, std::move(f_set), seed,
                               /*pr_cost_mode=*/false);
}

OutlierSolution round_pro(const MetricSpace& ms, const Assignment& sol,
                          const RoundingParams& params, int f) {
  (void)f;
  const int n = ms.n();
  const double scale = 6.0 * std::log(static_cast<double>(n)) / params.epsilon;
  return round_outliers_common(ms, sol, scale,
                               threshold_outliers(sol, n, params.epsilon),
                               params.seed, /*pr_cost_mode=*/true);
}

std::vector<Vertex> sample_random_landmarks(int n, std::uint64_t seed) {
  Rng rng(seed);
  const double p = std::pow(static_cast<double>(n), -1.0 / 3.0);
  std::vector<Vertex> a;
  for (Vertex v = 1; v <= n; ++v)
    if (rng.bernoulli(p)) a.push_back(v);
  if (a.empty())
    a.push_back(static_cast<Vertex>(rng.next_int(1, n)));
  return a;
}

std::string trial_csv(const std::vector<TrialLogRow>& rows) {
  std::ostringstream out;
  out << "trial,seed,a_size,f_size,cost,lp_or_sdp_objective,"
         "forced_empty_fallback\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f", r.objective);
    out << r.trial << ',' << r.seed << ',' << r.a_size << ',' << r.f_size
        << ',' << r.cost << ',' << buf << ',' << (r.forced ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace ado
