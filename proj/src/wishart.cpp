#include "cgwish/wishart.hpp"

#include <cmath>

namespace cgwish {

Vector alpha_from_offset(double offset, const Graph& g) {
  const auto idx = neighbor_index(g);
  Vector a(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) a(i) = offset + idx.lower_count[i];
  return a;
}

Vector alpha_from_delta(double delta, const Graph& g) {
  const auto idx = neighbor_index(g);
  const int m = g.num_vertices();
  Vector a(m);
  for (int i = 0; i < m; ++i) a(i) = delta + 2.0 * m - 2.0 * idx.higher_count[i];
  return a;
}

double log_unnorm_density_theta(const CholFactor& f, const PriorSpec& p) {
  const int m = f.dim();
  if (p.dim() != m || p.u.rows() != m)
    throw DimensionMismatchError("log_unnorm_density_theta: dimension mismatch");
  const Matrix n = tri_inverse(f.L);
  double tr = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vector row = n.row(i).transpose();
    tr += row.dot(p.u * row) / f.D(i);
  }
  double logs = 0.0;
  for (int i = 0; i < m; ++i) logs += p.alpha(i) * std::log(f.D(i));
  return -0.5 * (tr + logs);
}

double log_unnorm_density_pg(const Matrix& sigma, const PriorSpec& p, const Graph& g) {
  const int m = g.num_vertices();
  if (p.dim() != m || sigma.rows() != m)
    throw DimensionMismatchError("log_unnorm_density_pg: dimension mismatch");
  if (!in_pg(sigma, g, 1e-9 * (1.0 + sigma.cwiseAbs().maxCoeff())))
    throw NotInPGError("log_unnorm_density_pg: matrix is not in P_G");
  const CholFactor f = modified_cholesky(sigma);
  const auto idx = neighbor_index(g);
  const Matrix n = tri_inverse(f.L);
  double tr = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vector row = n.row(i).transpose();
    tr += row.dot(p.u * row) / f.D(i);
  }
  double logs = 0.0;
  for (int i = 0; i < m; ++i)
    logs += (2.0 * idx.higher_count[i] + p.alpha(i)) * std::log(f.D(i));
  return -0.5 * (tr + logs);
}

double log_unnorm_density_qg(const IncompleteMatrix& x, const PriorSpec& p, const Graph& g,
                             const CliqueDecomposition& dec) {
  const Matrix sigma = completion_qg_to_pg(x, dec, g.num_vertices());
  return log_unnorm_density_pg(sigma, p, g) + log_jacobian_qg_to_pg(x, dec);
}

bool is_integrable(const PriorSpec& p, const Graph& g) {
  if (p.dim() != g.num_vertices()) return false;
  const auto idx = neighbor_index(g);
  for (int i = 0; i < g.num_vertices(); ++i)
    if (!(p.alpha(i) > idx.lower_count[i] + 2.0)) return false;
  return is_positive_definite(p.u);
}

PriorSpec posterior_update(const PriorSpec& p, const DataSummary& d) {
  const int m = p.dim();
  if (d.s.rows() != m || d.s.cols() != m)
    throw DimensionMismatchError("posterior_update: data/prior dimension mismatch");
  PriorSpec post;
  post.u = static_cast<double>(d.n) * d.s + p.u;
  const double dof = d.centered ? d.n - 1.0 : static_cast<double>(d.n);
  post.alpha = p.alpha.array() + dof;
  return post;
}

DataSummary sample_covariance(const Matrix& y, bool center) {
  const int n = static_cast<int>(y.rows());
  if (n < 1 || (center && n < 2))
    throw InsufficientDataError("sample_covariance: need n >= 1 (n >= 2 when centering)");
  DataSummary d;
  d.n = n;
  d.centered = center;
  if (center) {
    const Eigen::RowVectorXd mean = y.colwise().mean();
    const Matrix yc = y.rowwise() - mean;
    d.s = (yc.transpose() * yc) / static_cast<double>(n);
  } else {
    d.s = (y.transpose() * y) / static_cast<double>(n);
  }
  d.s = 0.5 * (d.s + d.s.transpose());
  return d;
}

double log_likelihood_kernel(const CholFactor& f, const DataSummary& d) {
  const int m = f.dim();
  if (d.s.rows() != m) throw DimensionMismatchError("log_likelihood_kernel: dimension mismatch");
  const Matrix n = tri_inverse(f.L);
  double tr = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vector row = n.row(i).transpose();
    tr += row.dot(d.s * row) / f.D(i);
  }
  tr *= static_cast<double>(d.n);
  const double dof = d.centered ? d.n - 1.0 : static_cast<double>(d.n);
  double logs = 0.0;
  for (int i = 0; i < m; ++i) logs += dof * std::log(f.D(i));
  return -0.5 * (tr + logs);
}

}  // namespace cgwish
