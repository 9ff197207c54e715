#pragma once

// Shared oracles for the test suites: finite differences, brute-force graph
// checks, distribution tests. Everything here is independent of the library
// code paths it is used to verify.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "cgwish/chol.hpp"
#include "cgwish/graph.hpp"
#include "cgwish/linalg.hpp"
#include "cgwish/rng.hpp"

namespace testsup {

using cgwish::Graph;
using cgwish::Matrix;
using cgwish::RngStream;
using cgwish::Vector;

// --- random objects -------------------------------------------------------

inline Matrix random_spd(int m, RngStream& rng, double ridge = 0.5) {
  Matrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = rng.normal();
  Matrix s = a * a.transpose() / m + ridge * Matrix::Identity(m, m);
  return 0.5 * (s + s.transpose());
}

inline cgwish::CholFactor random_factor_in_theta(const Graph& g, RngStream& rng,
                                                 double l_scale = 0.8) {
  const int m = g.num_vertices();
  cgwish::CholFactor f{Matrix::Identity(m, m), Vector(m)};
  for (auto [u, v] : g.edges()) f.L(std::max(u, v), std::min(u, v)) = l_scale * rng.normal();
  for (int i = 0; i < m; ++i) f.D(i) = rng.uniform(0.4, 2.5);
  return f;
}

// Sigma in P_G via the factor route; valid when the labeling is in S_D.
inline Matrix random_sigma_in_pg(const Graph& g, RngStream& rng) {
  return cgwish::reconstruct(random_factor_in_theta(g, rng));
}

// Sigma in P_G without touching Cholesky code: project a random SPD matrix
// onto the zero pattern and push the diagonal until positive definite.
inline Matrix random_sigma_in_pg_projected(const Graph& g, RngStream& rng) {
  const int m = g.num_vertices();
  Matrix s = random_spd(m, rng, 0.2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (!g.has_edge(i, j)) s(i, j) = s(j, i) = 0.0;
  while (!cgwish::is_positive_definite(s)) s += 0.25 * Matrix::Identity(m, m);
  return s;
}

// --- finite differences ----------------------------------------------------

inline double central_diff(const std::function<double(double)>& f, double x0, double h = 1e-6) {
  return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
}

inline double second_diff(const std::function<double(double, double)>& f, double x0, double y0,
                          bool same_coordinate, double h = 1e-4) {
  if (same_coordinate) return (f(x0 + h, y0) - 2.0 * f(x0, y0) + f(x0 - h, y0)) / (h * h);
  return (f(x0 + h, y0 + h) - f(x0 + h, y0 - h) - f(x0 - h, y0 + h) + f(x0 - h, y0 - h)) /
         (4.0 * h * h);
}

// --- brute-force graph oracles ---------------------------------------------

// Chordal iff no induced subgraph is a cycle of length >= 4. Exponential;
// use for m <= 8.
inline bool brute_force_chordal(const Graph& g) {
  const int m = g.num_vertices();
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < m; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    const int k = static_cast<int>(verts.size());
    if (k < 4) continue;
    const Graph sub = g.induced(verts);
    bool cycle = sub.num_edges() == k;
    for (int v = 0; v < k && cycle; ++v)
      if (static_cast<int>(sub.neighbors(v).size()) != 2) cycle = false;
    if (!cycle) continue;
    // connected 2-regular graph with k vertices and k edges = one cycle
    std::vector<bool> seen(k, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : sub.neighbors(x))
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
    }
    if (count == k) return false;
  }
  return true;
}

// Any induced path on 4 vertices?
inline bool brute_force_has_induced_a4(const Graph& g) {
  const int m = g.num_vertices();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          const Graph sub = g.induced({a, b, c, d});
          if (sub.num_edges() != 3) continue;
          int deg1 = 0, deg2 = 0;
          for (int v = 0; v < 4; ++v) {
            const auto dsz = sub.neighbors(v).size();
            if (dsz == 1) ++deg1;
            if (dsz == 2) ++deg2;
          }
          if (deg1 == 2 && deg2 == 2) return true;  // path, not a star
        }
  return false;
}

// --- distribution tests -----------------------------------------------------

// Regularized lower incomplete gamma P(a, x).
inline double reg_incomplete_gamma(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {  // series
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  // continued fraction for Q, return 1 - Q
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-30) d = 1e-30;
    c = b + an / c;
    if (std::abs(c) < 1e-30) c = 1e-30;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

// CDF of the inverse gamma with density ~ x^{-(a+1)} e^{-b/x}.
inline double invgamma_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  return 1.0 - reg_incomplete_gamma(a, b / x);
}

inline double normal_cdf(double x, double mu = 0.0, double sd = 1.0) {
  return 0.5 * std::erfc(-(x - mu) / (sd * std::sqrt(2.0)));
}

// Kolmogorov-Smirnov test of samples against a CDF; returns the asymptotic
// p-value.
inline double ks_pvalue(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - i / n));
    d = std::max(d, std::abs((i + 1) / n - f));
  }
  const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  double p = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    p += sign * 2.0 * std::exp(-2.0 * k * k * lambda * lambda);
    sign = -sign;
  }
  return std::clamp(p, 0.0, 1.0);
}

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

inline double sd_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / (v.size() - 1.0));
}

}  // namespace testsup
