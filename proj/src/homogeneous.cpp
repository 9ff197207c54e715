#include "cgwish/homogeneous.hpp"

#include <cmath>

namespace cgwish {

namespace {

void require_hasse_labeled(const Graph& g, const char* what) {
  if (!is_homogeneous(g))
    throw NotHomogeneousError(std::string(what) + ": graph is not homogeneous");
  if (!identity_in_SH(g))
    throw NotHomogeneousError(std::string(what) +
                              ": vertex labeling is not a Hasse scheme (relabel by hasse_order)");
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

LayerSets layer_sets(const Graph& g) {
  require_hasse_labeled(g, "layer_sets");
  const int m = g.num_vertices();
  const auto idx = neighbor_index(g);
  LayerSets ls;
  std::vector<bool> placed(m, false);
  int remaining = m;
  while (remaining > 0) {
    std::vector<int> layer;
    for (int i = 0; i < m; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (int j : idx.lower_nbrs[i])
        if (!placed[j]) { ready = false; break; }
      if (ready) layer.push_back(i);
    }
    for (int i : layer) placed[i] = true;
    remaining -= static_cast<int>(layer.size());
    ls.layers.push_back(std::move(layer));
  }
  return ls;
}

GammaCoords to_gamma(const Matrix& sigma, const Graph& g) {
  require_hasse_labeled(g, "to_gamma");
  const int m = g.num_vertices();
  if (!in_pg(sigma, g, 1e-9 * (1.0 + sigma.cwiseAbs().maxCoeff())))
    throw NotInPGError("to_gamma: matrix is not in P_G");
  GammaCoords gamma;
  gamma.d = Vector(m);
  gamma.beta.resize(m);
  for (int i = 0; i < m; ++i) {
    const auto b = submatrices(sigma, g, i);
    if (b.idx.empty()) {
      gamma.d(i) = sigma(i, i);
      gamma.beta[i] = Vector(0);
    } else {
      gamma.beta[i] = spd_solve(b.u_prec, b.u_col);
      gamma.d(i) = sigma(i, i) - b.u_col.dot(gamma.beta[i]);
    }
  }
  return gamma;
}

Matrix from_gamma(const GammaCoords& gamma, const Graph& g) {
  require_hasse_labeled(g, "from_gamma");
  const int m = g.num_vertices();
  const auto idx = neighbor_index(g);
  Matrix sigma = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const auto& pred = idx.lower_nbrs[i];
    if (pred.empty()) {
      sigma(i, i) = gamma.d(i);
      continue;
    }
    const Matrix sig_prec = principal_submatrix(sigma, pred);
    const Vector col = sig_prec * gamma.beta[i];
    for (std::size_t k = 0; k < pred.size(); ++k) sigma(pred[k], i) = sigma(i, pred[k]) = col(k);
    sigma(i, i) = gamma.d(i) + gamma.beta[i].dot(col);
  }
  return sigma;
}

Matrix exact_sample(const PriorSpec& p, const Graph& g, RngStream& rng) {
  require_hasse_labeled(g, "exact_sample");
  if (!is_integrable(p, g))
    throw NonIntegrableError("exact_sample: prior fails alpha_i > |N^<(i)| + 2 or U is not PD");
  const int m = g.num_vertices();
  GammaCoords gamma;
  gamma.d = Vector(m);
  gamma.beta.resize(m);
  for (int i = 0; i < m; ++i) {
    const auto b = submatrices(p.u, g, i);
    const int ni = static_cast<int>(b.idx.size());
    const double shape = 0.5 * p.alpha(i) - 0.5 * ni - 1.0;
    if (ni == 0) {
      gamma.d(i) = rng.invgamma(shape, 0.5 * p.u(i, i));
      gamma.beta[i] = Vector(0);
      continue;
    }
    const Matrix prec_inv = spd_inverse(b.u_prec);
    const Vector mean = prec_inv * b.u_col;
    const double schur = p.u(i, i) - b.u_col.dot(mean);
    gamma.d(i) = rng.invgamma(shape, 0.5 * schur);
    gamma.beta[i] = sample_mvn(mean, gamma.d(i) * prec_inv, rng);
  }
  return from_gamma(gamma, g);
}

double log_normalizing_constant(const PriorSpec& p, const Graph& g) {
  require_hasse_labeled(g, "log_normalizing_constant");
  if (!is_integrable(p, g))
    throw NonIntegrableError(
        "log_normalizing_constant: finite iff alpha_i > |N^<(i)| + 2 with U positive definite");
  const int m = g.num_vertices();
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto b = submatrices(p.u, g, i);
    const int ni = static_cast<int>(b.idx.size());
    const double a = 0.5 * p.alpha(i);
    const double logdet_prec = b.idx.empty() ? 0.0 : spd_logdet(b.u_prec);
    const double logdet_preceq = spd_logdet(b.u_preceq);
    total += std::lgamma(a - 0.5 * ni - 1.0) + (a - 1.0) * std::log(2.0) +
             0.5 * ni * std::log(kPi) + (a - 0.5 * ni - 1.5) * logdet_prec -
             (a - 0.5 * ni - 1.0) * logdet_preceq;
  }
  return total;
}

Matrix expected_sigma(const PriorSpec& p, const Graph& g) {
  require_hasse_labeled(g, "expected_sigma");
  const int m = g.num_vertices();
  const auto idx = neighbor_index(g);
  for (int i = 0; i < m; ++i)
    if (!(p.alpha(i) > idx.lower_count[i] + 4.0))
      throw MomentDoesNotExistError("expected_sigma: requires alpha_i > |N^<(i)| + 4");
  if (!is_positive_definite(p.u))
    throw NonIntegrableError("expected_sigma: U must be positive definite");

  Matrix mean = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const auto b = submatrices(p.u, g, i);
    const int ni = static_cast<int>(b.idx.size());
    if (ni == 0) {
      mean(i, i) = p.u(i, i) / (p.alpha(i) - 4.0);
      continue;
    }
    const Matrix prec_inv = spd_inverse(b.u_prec);
    const Vector m_u = prec_inv * b.u_col;
    const double e_d = (p.u(i, i) - b.u_col.dot(m_u)) / (p.alpha(i) - ni - 4.0);
    const Matrix e_sig_prec = principal_submatrix(mean, b.idx);
    const Vector e_col = e_sig_prec * m_u;
    for (int k = 0; k < ni; ++k) mean(b.idx[k], i) = mean(i, b.idx[k]) = e_col(k);
    mean(i, i) = e_d + (e_sig_prec * (prec_inv * e_d + m_u * m_u.transpose())).trace();
  }
  return mean;
}

HyperMarkovReport check_hyper_markov(const std::vector<Matrix>& samples, const Graph& g) {
  require_hasse_labeled(g, "check_hyper_markov");
  const int m = g.num_vertices();
  const std::size_t n = samples.size();
  HyperMarkovReport rep;
  rep.threshold = n > 0 ? 4.0 / std::sqrt(static_cast<double>(n)) : 0.0;
  if (m < 2 || n < 3) return rep;

  // D(Sigma) for every sample, once
  Matrix dvals(n, m);
  for (std::size_t s = 0; s < n; ++s) dvals.row(s) = modified_cholesky(samples[s]).D.transpose();

  auto corr = [&](const Vector& x, const Vector& y) {
    const double mx = x.mean(), my = y.mean();
    const Vector cx = x.array() - mx, cy = y.array() - my;
    const double den = std::sqrt(cx.squaredNorm() * cy.squaredNorm());
    return den > 0.0 ? cx.dot(cy) / den : 0.0;
  };

  for (int i = 1; i < m; ++i) {
    const Vector di = dvals.col(i);
    double worst = 0.0;
    for (int u = 0; u < i; ++u)
      for (int v = u; v < i; ++v) {
        if (u != v && !g.has_edge(u, v)) continue;  // structural zeros carry no information
        Vector entry(n);
        for (std::size_t s = 0; s < n; ++s) entry(s) = samples[s](u, v);
        worst = std::max(worst, std::abs(corr(di, entry)));
      }
    rep.max_abs_corr.push_back(worst);
    rep.flagged.push_back(worst > rep.threshold);
    rep.any_flagged = rep.any_flagged || worst > rep.threshold;
  }
  return rep;
}

std::vector<double> trace_decomposition(const Matrix& sigma, const Matrix& u, const Graph& g) {
  require_hasse_labeled(g, "trace_decomposition");
  const int m = g.num_vertices();
  const GammaCoords gamma = to_gamma(sigma, g);
  std::vector<double> terms(m);
  for (int i = 0; i < m; ++i) {
    const auto b = submatrices(u, g, i);
    if (b.idx.empty()) {
      terms[i] = u(i, i) / gamma.d(i);
      continue;
    }
    const Vector m_u = spd_solve(b.u_prec, b.u_col);
    const Vector diff = gamma.beta[i] - m_u;
    terms[i] = (diff.dot(b.u_prec * diff) + u(i, i) - b.u_col.dot(m_u)) / gamma.d(i);
  }
  return terms;
}

}  // namespace cgwish
