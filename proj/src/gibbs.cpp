#include "cgwish/gibbs.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace cgwish {

GibbsIndex::GibbsIndex(const Graph& g) {
  const int m = g.num_vertices();
  free_idx.resize(m);
  zero_idx.resize(m);
  for (int v = 0; v + 1 < m; ++v) {
    for (int u : g.neighbors(v))
      if (u > v) free_idx[v].push_back(u);
    // W_v: higher non-neighbors plus lower structural zeros of row v of L^{-1}
    const auto zeros = structural_zero_row(g, v);
    for (int w : zeros)
      if (w < v || !g.has_edge(w, v)) zero_idx[v].push_back(w);
  }
}

namespace {

struct ColumnParamsCore {
  Vector mean;
  Matrix prec;  // (M^{v,G})^{-1}
};

// The conditional of L^G_{.v} is exactly Gaussian: the trace form is a
// quadratic in the block with Hessian 2 c Omega_{E,E}, c = (L^{-1} U~
// L^{-T})_{vv}. The mean is its stationary point, computed by completing the
// square with the block zeroed:
//   mean = (c Omega_EE)^{-1} (Omega s)_E,   s = U~ (L^{-1})_{v.}^T,
// everything evaluated at L with column v zeroed. `l` must already have the
// free entries of column v cleared.
ColumnParamsCore column_params_core(const Matrix& l, const Vector& d, const Matrix& u_tilde,
                                    int v, const std::vector<int>& e_v) {
  const int m = static_cast<int>(l.rows());
  const int ne = static_cast<int>(e_v.size());
  const Matrix n = tri_inverse(l);
  const Vector row_v = n.row(v).transpose();
  const Vector s = u_tilde * row_v;  // s_j = (L^{-1} U~)_{v j}
  const double c = s.dot(row_v);     // (L^{-1} U~ L^{-T})_{vv}
  if (!(c > 0.0) || !std::isfinite(c))
    throw SingularPrecisionError("conditional_column_params: row quadratic form not positive");

  // Omega = N^T D^{-1} N; entries over indices > v do not depend on column v
  Matrix omega_ee(ne, ne);
  for (int a = 0; a < ne; ++a)
    for (int b = a; b < ne; ++b) {
      double acc = 0.0;
      for (int k = e_v[b]; k < m; ++k) acc += n(k, e_v[a]) * n(k, e_v[b]) / d(k);
      omega_ee(a, b) = omega_ee(b, a) = acc;
    }

  // (Omega s)_u = sum_k N_{ku} (N s)_k / D_k
  const Vector t = n * s;
  Vector g = Vector::Zero(ne);
  for (int a = 0; a < ne; ++a)
    for (int k = e_v[a]; k < m; ++k) g(a) += n(k, e_v[a]) * t(k) / d(k);

  Eigen::LLT<Matrix> llt(omega_ee);
  if (llt.info() != Eigen::Success)
    throw SingularPrecisionError(
        "conditional_column_params: precision block not positive definite");

  ColumnParamsCore out;
  out.mean = llt.solve(g) / c;
  out.prec = c * omega_ee;
  return out;
}

}  // namespace

ConditionalColumnParams conditional_column_params(const ChainState& state, int v,
                                                  const Matrix& u_tilde, const Graph& g) {
  const GibbsIndex index(g);
  if (index.free_idx[v].empty())
    throw InvalidParamsError("conditional_column_params: column block is empty");
  Matrix l = state.factor.L;
  for (int u : index.free_idx[v]) l(u, v) = 0.0;
  const auto core = column_params_core(l, state.factor.D, u_tilde, v, index.free_idx[v]);
  ConditionalColumnParams out;
  out.free_idx = index.free_idx[v];
  out.mean = core.mean;
  Eigen::LLT<Matrix> llt(core.prec);
  if (llt.info() != Eigen::Success)
    throw SingularPrecisionError("conditional_column_params: precision not positive definite");
  out.cov = llt.solve(Matrix::Identity(out.free_idx.size(), out.free_idx.size()));
  return out;
}

std::pair<double, double> conditional_d_params(const ChainState& state, int i,
                                               const Matrix& u_tilde,
                                               const Vector& alpha_tilde) {
  const double shape = 0.5 * alpha_tilde(i) - 1.0;
  if (!(shape > 0.0))
    throw NonIntegrableError("conditional_d_params: alpha~_i must exceed 2");
  const Matrix n = tri_inverse(state.factor.L);
  const Vector row = n.row(i).transpose();
  const double scale = 0.5 * row.dot(u_tilde * row);
  return {shape, scale};
}

void gibbs_step(ChainState& state, const PriorSpec& posterior, const Graph& g,
                const GibbsIndex& index, RngStream& rng) {
  const int m = g.num_vertices();
  Matrix& l = state.factor.L;
  Vector& d = state.factor.D;

  for (int v = 0; v + 1 < m; ++v) {
    const auto& e_v = index.free_idx[v];
    if (e_v.empty()) continue;
    // the block is being replaced wholesale, so clear it and complete the
    // square around zero; L^{-1} is refreshed inside
    for (int u : e_v) l(u, v) = 0.0;
    const auto core = column_params_core(l, d, posterior.u, v, e_v);
    Eigen::LLT<Matrix> llt(core.prec);
    if (llt.info() != Eigen::Success)
      throw SingularPrecisionError("gibbs_step: precision not positive definite");
    const int ne = static_cast<int>(e_v.size());
    Vector z(ne);
    for (int a = 0; a < ne; ++a) z(a) = rng.normal();
    // with prec = C C^T, solving C^T x = z draws x ~ N(0, prec^{-1})
    const Matrix lchol = llt.matrixL();
    const Vector draw =
        core.mean + lchol.transpose().triangularView<Eigen::Upper>().solve(z);
    for (int a = 0; a < ne; ++a) l(e_v[a], v) = draw(a);
  }

  const Matrix n = tri_inverse(l);
  for (int i = 0; i < m; ++i) {
    const double shape = 0.5 * posterior.alpha(i) - 1.0;
    if (!(shape > 0.0)) throw NonIntegrableError("gibbs_step: alpha~_i must exceed 2");
    const Vector row = n.row(i).transpose();
    const double scale = 0.5 * row.dot(posterior.u * row);
    d(i) = rng.invgamma(shape, scale);
  }
  ++state.iteration;
}

namespace {

ChainState initial_state(const PriorSpec& posterior, const Graph& g) {
  const int m = g.num_vertices();
  ChainState st;
  st.factor.L = Matrix::Identity(m, m);
  st.factor.D = Vector(m);
  for (int i = 0; i < m; ++i) st.factor.D(i) = posterior.u(i, i) / (posterior.alpha(i) - 2.0);
  return st;
}

struct ChainAccum {
  Matrix mean;
  std::vector<Matrix> se_batch_means;  // finer partition, for standard errors
  double drift = 0.0;
};

ChainAccum run_single_chain(const GibbsConfig& cfg, const PriorSpec& posterior, const Graph& g,
                            const GibbsIndex& index, RngStream rng, const TraceCallback& trace) {
  const int m = g.num_vertices();
  ChainState st = initial_state(posterior, g);
  for (int b = 0; b < cfg.burnin; ++b) gibbs_step(st, posterior, g, index, rng);

  // 10 batches drive the drift diagnostic; a finer partition feeds the
  // per-entry standard errors with enough degrees of freedom
  const int nbatch = std::min(10, cfg.iters);
  const int nse = std::min(50, cfg.iters);
  std::vector<Matrix> batches(nbatch, Matrix::Zero(m, m));
  std::vector<Matrix> se_batches(nse, Matrix::Zero(m, m));
  std::vector<int> batch_count(nbatch, 0), se_count(nse, 0);
  Matrix total = Matrix::Zero(m, m);
  for (int it = 0; it < cfg.iters; ++it) {
    for (int t = 0; t < cfg.thin; ++t) gibbs_step(st, posterior, g, index, rng);
    const Matrix sigma = reconstruct(st.factor);
    total += sigma;
    const int b = static_cast<int>((static_cast<long>(it) * nbatch) / cfg.iters);
    batches[b] += sigma;
    ++batch_count[b];
    const int s = static_cast<int>((static_cast<long>(it) * nse) / cfg.iters);
    se_batches[s] += sigma;
    ++se_count[s];
    if (trace) trace(st.iteration, st.factor);
  }
  ChainAccum acc;
  acc.mean = total / cfg.iters;
  const double scale = std::max(acc.mean.norm(), 1e-300);
  for (int b = 0; b < nbatch; ++b) {
    batches[b] /= batch_count[b];
    acc.drift = std::max(acc.drift, (batches[b] - acc.mean).norm() / scale);
  }
  for (int s = 0; s < nse; ++s) se_batches[s] /= se_count[s];
  acc.se_batch_means = std::move(se_batches);
  return acc;
}

}  // namespace

FitResult run_chain(const GibbsConfig& cfg, const PriorSpec& posterior, const Graph& g,
                    const TraceCallback& trace) {
  if (cfg.burnin < 0 || cfg.iters < 1 || cfg.thin < 1 || cfg.chains < 1)
    throw InvalidParamsError("run_chain: need burnin >= 0, iters >= 1, thin >= 1, chains >= 1");
  if (!cfg.skip_integrability_check && !is_integrable(posterior, g))
    throw NonIntegrableError(
        "run_chain: posterior fails the integrability condition "
        "(alpha_i > |N^<(i)| + 2 with positive definite U)");
  if (!identity_in_SD(g))
    throw InvalidParamsError("run_chain: vertex labeling is not in S_D; relabel first");
  if (trace && cfg.chains > 1)
    throw InvalidParamsError("run_chain: tracing is limited to a single chain");

  const auto t0 = std::chrono::steady_clock::now();
  const GibbsIndex index(g);
  RngStream root(cfg.seed);

  std::vector<ChainAccum> accums(cfg.chains);
  if (cfg.chains == 1) {
    accums[0] = run_single_chain(cfg, posterior, g, index, root.split(0), trace);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errs(cfg.chains);
    for (int c = 0; c < cfg.chains; ++c) {
      workers.emplace_back([&, c, rng = root.split(c)]() {
        try {
          accums[c] = run_single_chain(cfg, posterior, g, index, rng, nullptr);
        } catch (...) {
          errs[c] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  const int m = g.num_vertices();
  FitResult res;
  res.mean = Matrix::Zero(m, m);
  for (const auto& a : accums) res.mean += a.mean;
  res.mean /= cfg.chains;

  res.mc_se = Matrix::Zero(m, m);
  if (cfg.chains > 1) {
    Matrix var = Matrix::Zero(m, m);
    for (const auto& a : accums) var += (a.mean - res.mean).cwiseAbs2();
    var /= (cfg.chains - 1.0);
    res.mc_se = (var / cfg.chains).cwiseSqrt();
  } else if (static_cast<int>(accums[0].se_batch_means.size()) > 1) {
    const auto& bm = accums[0].se_batch_means;
    Matrix var = Matrix::Zero(m, m);
    for (const auto& b : bm) var += (b - res.mean).cwiseAbs2();
    var /= (bm.size() - 1.0);
    res.mc_se = (var / static_cast<double>(bm.size())).cwiseSqrt();
  }

  for (const auto& a : accums) res.batch_drift = std::max(res.batch_drift, a.drift);
  res.drift_warning = res.batch_drift > 0.05;
  res.burnin = cfg.burnin;
  res.iters = cfg.iters;
  res.thin = cfg.thin;
  res.chains = cfg.chains;
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace cgwish
