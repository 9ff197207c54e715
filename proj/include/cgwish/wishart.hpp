#pragma once

#include "cgwish/chol.hpp"
#include "cgwish/graph.hpp"
#include "cgwish/linalg.hpp"

namespace cgwish {

/// Parameters (U, alpha) of the covariance Wishart family pi_{U,alpha}.
/// U = 0 is accepted as a degenerate (improper) choice; such a prior is only
/// usable once data makes the posterior location matrix positive definite.
struct PriorSpec {
  Matrix u;
  Vector alpha;
  int dim() const { return static_cast<int>(alpha.size()); }
};

/// Sufficient statistics of a Gaussian sample: n and the (possibly centered)
/// second-moment matrix S with the 1/n convention.
struct DataSummary {
  int n = 0;
  Matrix s;
  bool centered = false;
};

/// alpha_i = offset + |N^<(i)|.
Vector alpha_from_offset(double offset, const Graph& g);

/// Single-shape subfamily: alpha_i = delta + 2m - 2 n_i with n_i the number
/// of higher-labeled neighbors.
Vector alpha_from_delta(double delta, const Graph& g);

/// -(tr((LDL^T)^{-1} U) + sum_i alpha_i log D_ii) / 2
double log_unnorm_density_theta(const CholFactor& f, const PriorSpec& p);

/// -(tr(Sigma^{-1} U) + sum_i (2 n_i + alpha_i) log D_ii(Sigma)) / 2 with
/// D(Sigma) from the modified Cholesky decomposition. Requires Sigma in P_G.
double log_unnorm_density_pg(const Matrix& sigma, const PriorSpec& p, const Graph& g);

/// Induced density on Q_G: the P_G density at zeta(x) plus the
/// clique/separator determinant correction.
double log_unnorm_density_qg(const IncompleteMatrix& x, const PriorSpec& p, const Graph& g,
                             const CliqueDecomposition& dec);

/// Sufficient condition alpha_i > |N^<(i)| + 2 (for all i) together with U
/// positive definite. Necessary and sufficient when the graph is homogeneous;
/// sufficient only in general.
bool is_integrable(const PriorSpec& p, const Graph& g);

/// Conjugate update: U~ = n S + U, alpha~ = alpha + n (alpha + n - 1 when the
/// summary is centered).
PriorSpec posterior_update(const PriorSpec& p, const DataSummary& d);

/// S = (1/n) sum y_i y_i^T, or the centered version with the same 1/n factor.
/// Rows of y are observations.
DataSummary sample_covariance(const Matrix& y, bool center);

/// Data log-density kernel matching the update rule: the difference
/// log pi~(f, posterior) - log pi~(f, prior) for any f.
double log_likelihood_kernel(const CholFactor& f, const DataSummary& d);

}  // namespace cgwish
