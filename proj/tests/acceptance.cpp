// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "cgwish/gibbs.hpp"
#include "cgwish/homogeneous.hpp"
#include "cgwish/presets.hpp"
#include "support/test_support.hpp"

using namespace cgwish;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: yeast posterior means vs the published BY1/BY2 columns,
// every entry within +-0.06.

const double kTableBY1[8][8] = {
    {0.164, 0.030, 0, -0.050, 0, 0, 0, -0.068},
    {0, 0.142, 0.040, 0.041, 0, 0, 0, 0.027},
    {0, 0, 0.237, 0.072, 0.193, 0.194, 0.235, 0.216},
    {0, 0, 0, 0.626, 0.713, 0.544, 0.509, 0.575},
    {0, 0, 0, 0, 3.462, 2.584, 2.756, 2.533},
    {0, 0, 0, 0, 0, 2.373, 2.400, 2.266},
    {0, 0, 0, 0, 0, 0, 2.961, 2.501},
    {0, 0, 0, 0, 0, 0, 0, 3.003}};
const double kTableBY2[8][8] = {
    {0.156, 0.030, 0, -0.052, 0, 0, 0, -0.068},
    {0, 0.133, 0.041, 0.042, 0, 0, 0, 0.028},
    {0, 0, 0.232, 0.076, 0.199, 0.200, 0.243, 0.223},
    {0, 0, 0, 0.643, 0.747, 0.568, 0.532, 0.599},
    {0, 0, 0, 0, 3.588, 2.682, 2.866, 2.636},
    {0, 0, 0, 0, 0, 2.453, 2.497, 2.358},
    {0, 0, 0, 0, 0, 0, 3.086, 2.604},
    {0, 0, 0, 0, 0, 0, 0, 3.153}};

void criterion1() {
  const Graph g = yeast_graph();
  const DataSummary d{yeast_sample_size(), yeast_covariance(), true};
  GibbsConfig cfg;
  cfg.burnin = 1000;
  cfg.iters = 20000;  // criterion allows I >= 1000; a long run removes luck
  cfg.seed = 1;

  bool pass = true;
  std::string detail;
  for (int which = 0; which < 2; ++which) {
    PriorSpec prior;
    if (which == 0)
      prior = {(yeast_covariance().trace() / 8.0) * Matrix::Identity(8, 8),
               alpha_from_offset(5.0, g)};
    else
      prior = {Matrix::Zero(8, 8), Vector::Constant(8, 2.0)};
    const FitResult r = run_chain(cfg, posterior_update(prior, d), g);
    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i; j < 8; ++j) {
        const double tab = which == 0 ? kTableBY1[i][j] : kTableBY2[i][j];
        const double diff = std::abs(r.mean(i, j) - tab);
        if (diff > worst) {
          worst = diff;
          wi = i;
          wj = j;
        }
      }
    pass = pass && worst <= 0.06;
    detail += fmt("%s max |diff| %.4f at (%d,%d)%s", which == 0 ? "BY1" : "BY2", worst, wi + 1,
                  wj + 1, which == 0 ? "; " : "");
  }
  report(1, pass, "yeast posterior means within +-0.06 of the published table: " + detail);
}

// ---------------------------------------------------------------------------
// Criterion 2: 50-vertex homogeneous benchmark, Gibbs vs closed form.

void criterion2() {
  const Graph g = sim50_graph();
  const Matrix sigma_true = sim50_sigma();
  const int n = 100;
  const auto idx = neighbor_index(g);

  const std::vector<int> checkpoints{1000, 3000, 5000};
  std::vector<double> avg_err(checkpoints.size(), 0.0);
  double max_final_err = 0.0, max_seconds = 0.0;

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RngStream rng(seed * 1000 + 7);
    const CholFactor ft = modified_cholesky(sigma_true);
    Matrix y(n, 50);
    Vector z(50);
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < 50; ++j) z(j) = rng.normal() * std::sqrt(ft.D(j));
      y.row(r) = (ft.L * z).transpose();
    }
    PriorSpec prior{Matrix::Zero(50, 50), Vector(50)};
    for (int i = 0; i < 50; ++i) prior.alpha(i) = 2.0 * idx.lower_count[i] + 5.0;
    const PriorSpec post = posterior_update(prior, sample_covariance(y, false));
    const Matrix closed = expected_sigma(post, g);

    const auto t0 = std::chrono::steady_clock::now();
    const GibbsIndex gindex(g);
    ChainState st;
    st.factor.L = Matrix::Identity(50, 50);
    st.factor.D = Vector(50);
    for (int i = 0; i < 50; ++i) st.factor.D(i) = post.u(i, i) / (post.alpha(i) - 2.0);
    RngStream chain(seed);
    for (int b = 0; b < 4000; ++b) gibbs_step(st, post, g, gindex, chain);
    Matrix acc = Matrix::Zero(50, 50);
    std::size_t next_cp = 0;
    for (int it = 1; it <= checkpoints.back(); ++it) {
      gibbs_step(st, post, g, gindex, chain);
      acc += reconstruct(st.factor);
      if (next_cp < checkpoints.size() && it == checkpoints[next_cp]) {
        const double err = (acc / it - closed).norm() / closed.norm();
        avg_err[next_cp] += err / 5.0;
        if (next_cp + 1 == checkpoints.size()) max_final_err = std::max(max_final_err, err);
        ++next_cp;
      }
    }
    max_seconds = std::max(
        max_seconds,
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }

  bool monotone = true;
  for (std::size_t k = 1; k < avg_err.size(); ++k)
    monotone = monotone && avg_err[k] <= avg_err[k - 1];
  const bool pass = max_final_err < 0.02 && monotone && max_seconds < 120.0;
  report(2, pass,
         fmt("sim50 Gibbs vs closed form: max rel err %.5f at B=4000,I=5000 (< 0.02); "
             "avg err over 5 seeds %.5f/%.5f/%.5f at I=1000/3000/5000 non-increasing: %s; "
             "max runtime %.1f s (< 120)",
             max_final_err, avg_err[0], avg_err[1], avg_err[2], monotone ? "yes" : "no",
             max_seconds));
}

// ---------------------------------------------------------------------------
// Criterion 3: oracle equivalence on random homogeneous graphs.

void criterion3() {
  RngStream master(42);
  int bad_entries = 0, graphs_checked = 0, comparisons = 0;
  double worst_z = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_homogeneous_graph(2 + t % 9, master);
    const int m = g.num_vertices();
    const auto idx = neighbor_index(g);
    PriorSpec p{testsup::random_spd(m, master, 1.0), Vector(m)};
    // slack >= 11 keeps fourth moments finite, so the sample-variance SE
    // estimates behind the 3-SE bands are themselves well behaved
    for (int i = 0; i < m; ++i) p.alpha(i) = idx.lower_count[i] + master.uniform(11.0, 16.0);
    const Matrix closed = expected_sigma(p, g);

    const int nmc = 100000;
    RngStream rng = master.split(t);
    Matrix acc = Matrix::Zero(m, m), acc2 = Matrix::Zero(m, m);
    for (int k = 0; k < nmc; ++k) {
      const Matrix s = exact_sample(p, g, rng);
      acc += s;
      acc2 += s.cwiseAbs2();
    }
    const Matrix mc_mean = acc / nmc;
    const Matrix mc_se = ((acc2 / nmc - mc_mean.cwiseAbs2()) / nmc).cwiseMax(0.0).cwiseSqrt();

    // long chains keep the Gibbs-side Monte Carlo error well below the
    // exact-sampler SE, so the combined band is dominated by the component
    // whose standard error estimate has ~1e5 degrees of freedom
    GibbsConfig cfg;
    cfg.burnin = 2000;
    cfg.iters = 40000;
    cfg.seed = 1000 + t;
    const FitResult gibbs = run_chain(cfg, p, g);

    ++graphs_checked;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        if (i != j && !g.has_edge(i, j)) continue;
        const double band_mc = 3.0 * mc_se(i, j) + 1e-9;
        const double band_gibbs =
            3.0 * std::sqrt(mc_se(i, j) * mc_se(i, j) + gibbs.mc_se(i, j) * gibbs.mc_se(i, j)) +
            1e-9;
        worst_z = std::max({worst_z, 3.0 * std::abs(mc_mean(i, j) - closed(i, j)) / band_mc,
                            3.0 * std::abs(gibbs.mean(i, j) - closed(i, j)) / band_gibbs,
                            3.0 * std::abs(gibbs.mean(i, j) - mc_mean(i, j)) / band_gibbs});
        comparisons += 3;
        if (std::abs(mc_mean(i, j) - closed(i, j)) > band_mc) ++bad_entries;
        if (std::abs(gibbs.mean(i, j) - closed(i, j)) > band_gibbs) ++bad_entries;
        if (std::abs(gibbs.mean(i, j) - mc_mean(i, j)) > band_gibbs) ++bad_entries;
      }
  }
  // Per-entry bands are 3 MC SEs; across thousands of simultaneous
  // comparisons the 3-sigma convention expects ~0.27% beyond the band, so the
  // verdict admits that rate. A real bias (shape off by one, a wrong
  // conditional mean) pushes many entries past z = 5 and still fails.
  const bool pass =
      bad_entries <= std::max(1, comparisons / 100) && worst_z < 5.0;
  report(3, pass,
         fmt("oracle equivalence on %d random homogeneous graphs (1e5 exact draws + Gibbs): "
             "%d of %d entry comparisons outside 3 MC SEs (expected ~%.1f under the 3-sigma "
             "convention, allowed 1%%), worst z = %.2f (< 5)",
             graphs_checked, bad_entries, comparisons, 0.0027 * comparisons, worst_z));
}

// ---------------------------------------------------------------------------
// Criterion 4: closed-form z against alpha-shift importance sampling on all
// homogeneous graphs with m <= 4.

void criterion4() {
  RngStream master(7);
  int cases = 0, failures = 0;
  double worst_z = 0.0;
  for (int m = 1; m <= 4; ++m) {
    const int npairs = m * (m - 1) / 2;
    for (int mask = 0; mask < (1 << npairs); ++mask) {
      std::vector<std::pair<int, int>> e;
      int bit = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++bit)
          if (mask & (1 << bit)) e.emplace_back(i, j);
      const Graph g(m, e);
      if (!is_homogeneous(g) || !identity_in_SH(g)) continue;
      const auto idx = neighbor_index(g);

      for (int rep = 0; rep < 10; ++rep) {
        PriorSpec p{testsup::random_spd(m, master, 1.0), Vector(m)};
        Vector delta(m);
        for (int i = 0; i < m; ++i) {
          p.alpha(i) = idx.lower_count[i] + master.uniform(3.0, 8.0);
          // half the integrability slack keeps the weight variance finite
          delta(i) = 0.5 * (p.alpha(i) - idx.lower_count[i] - 2.0);
        }
        PriorSpec proposal{p.u, p.alpha + delta};
        const double closed_diff =
            log_normalizing_constant(p, g) - log_normalizing_constant(proposal, g);

        // z(alpha)/z(alpha+delta) = E_{alpha+delta}[ prod_i D_i^{delta_i/2} ]
        const int nmc = 20000;
        RngStream rng = master.split(1000 * m + mask * 16 + rep);
        double wsum = 0.0, w2sum = 0.0;
        for (int k = 0; k < nmc; ++k) {
          const Matrix s = exact_sample(proposal, g, rng);
          const CholFactor f = modified_cholesky(s);
          double logw = 0.0;
          for (int i = 0; i < m; ++i) logw += 0.5 * delta(i) * std::log(f.D(i));
          const double w = std::exp(logw);
          wsum += w;
          w2sum += w * w;
        }
        const double mean_w = wsum / nmc;
        const double sd_w = std::sqrt(std::max(0.0, w2sum / nmc - mean_w * mean_w));
        const double se_log = sd_w / mean_w / std::sqrt(double(nmc));
        const double zscore = std::abs(std::log(mean_w) - closed_diff) / se_log;
        worst_z = std::max(worst_z, zscore);
        ++cases;
        if (zscore > 3.0) ++failures;
      }
    }
  }
  // same multiple-comparison calibration as criterion 3
  const bool pass = failures <= std::max(1, cases / 100) && worst_z < 5.0;
  report(4, pass,
         fmt("normalizing constant vs importance sampling: %d cases over all homogeneous "
             "m <= 4, %d outside 3 MC SEs (expected ~%.1f, allowed 1%%), worst z = %.2f (< 5)",
             cases, failures, 0.0027 * cases, worst_z));
}

// ---------------------------------------------------------------------------
// Criterion 5: derivative identities vs finite differences.

void criterion5() {
  RngStream rng(11);
  double worst_l3 = 0.0, worst_l4 = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int m = 4 + t % 4;
    const Graph g = random_decomposable_graph(m, rng, 0.8);
    if (g.num_edges() == 0) continue;
    const CholFactor f = testsup::random_factor_in_theta(g, rng, 0.6);
    const auto [lo, hi] = g.edges()[t % g.num_edges()];
    const int v = lo, u = hi;
    const Matrix analytic = dLinv_dL(f.L, u, v, g);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        const double fd = testsup::central_diff(
            [&](double x) {
              Matrix lp = f.L;
              lp(u, v) = x;
              return tri_inverse(lp)(i, j);
            },
            f.L(u, v), 1e-6);
        worst_l3 = std::max(worst_l3, std::abs(analytic(i, j) - fd));
      }
  }
  for (int t = 0; t < 100; ++t) {
    const int m = 4 + t % 4;
    const Graph g = random_decomposable_graph(m, rng, 0.9);
    const CholFactor f = testsup::random_factor_in_theta(g, rng, 0.5);
    const Matrix u_mat = testsup::random_spd(m, rng);
    int v = -1;
    std::vector<int> free;
    for (int cand = 0; cand + 1 < m && v < 0; ++cand) {
      free.clear();
      for (int u : g.neighbors(cand))
        if (u > cand) free.push_back(u);
      if (!free.empty()) v = cand;
    }
    if (v < 0) continue;
    const int u = free[t % free.size()];
    const int up = free[(t + 1) % free.size()];
    const double analytic = trace_hessian_entry(f, u_mat, v, u, up, g);
    auto trace_at = [&](double x, double y) {
      Matrix lp = f.L;
      lp(u, v) = x;
      lp(up, v) = (u == up) ? x : y;
      const Matrix nn = tri_inverse(lp);
      return (nn.transpose() * f.D.cwiseInverse().asDiagonal() * nn * u_mat).trace();
    };
    const double fd = testsup::second_diff(trace_at, f.L(u, v), f.L(up, v), u == up);
    worst_l4 = std::max(worst_l4, std::abs(analytic - fd) / std::max(1.0, std::abs(analytic)));
  }
  const bool pass = worst_l3 < 1e-5 && worst_l4 < 1e-4;
  report(5, pass,
         fmt("derivative identities vs finite differences: worst first-derivative error %.2e "
             "(< 1e-5), worst Hessian error %.2e (< 1e-4), 100 instances each",
             worst_l3, worst_l4));
}

// ---------------------------------------------------------------------------
// Criterion 6: structural correctness.

void criterion6() {
  RngStream rng(13);
  double worst_inv = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_decomposable_graph(2 + t % 9, rng, 0.7);
    const CholFactor f = testsup::random_factor_in_theta(g, rng);
    worst_inv = std::max(worst_inv,
                         (tri_inverse(f.L) - tri_inverse_pathsum(f.L)).cwiseAbs().maxCoeff());
  }

  double worst_fill = 0.0, worst_inv_fill = 0.0;
  for (int t = 0; t < 6; ++t) {
    const Graph g0 = random_decomposable_graph(6 + t, rng, 0.6);
    const Graph g = g0.relabel(perfect_vertex_order(g0));
    for (int rep = 0; rep < 200; ++rep) {
      const Matrix sigma = testsup::random_sigma_in_pg(g, rng);
      const CholFactor f = modified_cholesky(sigma);
      for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = 0; j < i; ++j)
          if (!g.has_edge(i, j)) worst_fill = std::max(worst_fill, std::abs(f.L(i, j)));
    }
  }
  for (int t = 0; t < 6; ++t) {
    const Graph g = random_homogeneous_graph(6 + t, rng);
    for (int rep = 0; rep < 200; ++rep) {
      const Matrix sigma = testsup::random_sigma_in_pg(g, rng);
      const CholFactor f = modified_cholesky(sigma);
      const Matrix n = tri_inverse(f.L);
      for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = 0; j < i; ++j)
          if (!g.has_edge(i, j)) {
            worst_fill = std::max(worst_fill, std::abs(f.L(i, j)));
            worst_inv_fill = std::max(worst_inv_fill, std::abs(n(i, j)));
          }
    }
  }
  const bool pass = worst_inv < 1e-10 && worst_fill < 1e-12 && worst_inv_fill < 1e-12;
  report(6, pass,
         fmt("structural correctness: path-sum vs forward-substitution inverse %.2e (< 1e-10); "
             "fill-in in L %.2e and in L^{-1} %.2e (< 1e-12, 200 draws per graph)",
             worst_inv, worst_fill, worst_inv_fill));
}

// ---------------------------------------------------------------------------
// Criterion 7: conjugacy algebra.

void criterion7() {
  RngStream rng(17);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int m = 3 + t % 5;
    const PriorSpec p{testsup::random_spd(m, rng), Vector::Random(m).array() + 5.0};
    const DataSummary d1{5 + t % 7, testsup::random_spd(m, rng), false};
    const DataSummary d2{3 + t % 11, testsup::random_spd(m, rng), false};
    const PriorSpec seq = posterior_update(posterior_update(p, d1), d2);
    const PriorSpec swp = posterior_update(posterior_update(p, d2), d1);
    DataSummary pooled{d1.n + d2.n, (d1.n * d1.s + d2.n * d2.s) / (d1.n + d2.n), false};
    const PriorSpec pol = posterior_update(p, pooled);
    worst = std::max({worst, (seq.u - pol.u).cwiseAbs().maxCoeff(),
                      (seq.alpha - pol.alpha).cwiseAbs().maxCoeff(),
                      (seq.u - swp.u).cwiseAbs().maxCoeff(),
                      (seq.alpha - swp.alpha).cwiseAbs().maxCoeff()});
  }
  report(7, worst < 1e-12,
         fmt("conjugacy: posterior-of-posterior vs pooled data and update commutativity, "
             "worst deviation %.2e (< 1e-12)",
             worst));
}

// ---------------------------------------------------------------------------
// Criterion 8: integrability boundary by Monte Carlo over nested boxes.

// Reconstruct L in L_G from prescribed values of L^{-1} on the edge set, by
// increasing span: L_ij = (path sum without the direct step) - x_ij.
Matrix l_from_linv_edges(const Graph& g, const std::vector<double>& x) {
  const int m = g.num_vertices();
  Matrix l = Matrix::Identity(m, m);
  for (int span = 1; span < m; ++span) {
    std::size_t k = 0;
    for (auto [u, v] : g.edges()) {
      const int i = std::max(u, v), j = std::min(u, v);
      if (i - j == span) {
        l(i, j) = 0.0;
        const double indirect = tri_inverse(l)(i, j);
        l(i, j) = indirect - x[k];
      }
      ++k;
    }
  }
  return l;
}

void criterion8() {
  RngStream rng(19);
  bool pass = true;
  std::string detail;
  const std::vector<Graph> graphs{Graph(3, {{0, 1}, {1, 2}}),
                                  Graph(3, {{0, 1}, {0, 2}, {1, 2}})};
  const char* names[] = {"path3", "K3"};
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const auto idx = neighbor_index(g);
    const int m = 3, ne = g.num_edges();
    const Matrix u = testsup::random_spd(m, rng, 1.0);
    Vector good(m), bad(m);
    for (int i = 0; i < m; ++i) good(i) = bad(i) = idx.lower_count[i] + 3.0;
    bad(m - 1) = idx.lower_count[m - 1] + 1.5;  // 0.5 below the boundary

    auto z_box = [&](const Vector& alpha, double width, std::uint64_t seed) {
      RngStream r(seed);
      double acc = 0.0;
      const int nsamp = 300000;
      std::vector<double> x(ne);
      for (int k = 0; k < nsamp; ++k) {
        for (int j = 0; j < ne; ++j) x[j] = r.uniform(-width, width);
        const Matrix l = l_from_linv_edges(g, x);
        const Matrix n = tri_inverse(l);
        double val = 1.0;
        for (int i = 0; i < m; ++i) {
          const Vector row = n.row(i).transpose();
          val *= std::tgamma(alpha(i) / 2.0 - 1.0) * std::pow(2.0, alpha(i) / 2.0 - 1.0) *
                 std::pow(row.dot(u * row), -(alpha(i) / 2.0 - 1.0));
        }
        acc += val;
      }
      return std::pow(2.0 * width, ne) * acc / nsamp;
    };

    std::vector<double> zg, zb;
    for (double w : {4.0, 8.0, 16.0, 32.0, 64.0}) {
      zg.push_back(z_box(good, w, 100 + gi));
      zb.push_back(z_box(bad, w, 100 + gi));
    }
    const bool bounded = zg.back() / zg[zg.size() - 2] < 1.10;
    bool divergent = true;
    for (std::size_t i = 1; i < zb.size(); ++i) divergent = divergent && zb[i] > 1.2 * zb[i - 1];
    pass = pass && bounded && divergent;
    detail += fmt("%s: integrable tail ratio %.3f (< 1.10), divergent growth %s%s", names[gi],
                  zg.back() / zg[zg.size() - 2], divergent ? "monotone" : "BROKEN",
                  gi == 0 ? "; " : "");
  }
  report(8, pass, "integrability boundary by nested-box Monte Carlo: " + detail);
}

// ---------------------------------------------------------------------------
// Criterion 9: hyper-Markov independence on exact prior samples.

void criterion9() {
  const Graph g = homogeneous_graph_from_hasse_tree({-1, 0, 0, 2, 2, 2}, {1, 1, 2, 1, 1, 1});
  RngStream rng(23);
  PriorSpec p{testsup::random_spd(7, rng, 1.0), Vector(7)};
  const auto idx = neighbor_index(g);
  for (int i = 0; i < 7; ++i) p.alpha(i) = idx.lower_count[i] + 12.0;
  const int n = 100000;
  std::vector<Matrix> samples;
  samples.reserve(n);
  for (int t = 0; t < n; ++t) samples.push_back(exact_sample(p, g, rng));
  const auto rep = check_hyper_markov(samples, g);
  double worst = 0.0;
  for (double r : rep.max_abs_corr) worst = std::max(worst, r);
  report(9, !rep.any_flagged,
         fmt("hyper-Markov: max |corr(D_ii, leading block)| = %.5f over 1e5 exact samples "
             "(threshold 4/sqrt(N) = %.5f)",
             worst, rep.threshold));
}

}  // namespace

int main() {
  std::printf("cgwish acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
