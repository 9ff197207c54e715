#pragma once

#include <vector>

#include "cgwish/graph.hpp"
#include "cgwish/linalg.hpp"

namespace cgwish {

/// A point of Theta_G: unit lower-triangular L (structural zeros off the
/// graph pattern when the labeling is in S_D) and positive diagonal D.
struct CholFactor {
  Matrix L;
  Vector D;
  int dim() const { return static_cast<int>(D.size()); }
};

/// Sigma = L D L^T.
Matrix reconstruct(const CholFactor& f);

/// Modified Cholesky decomposition (LDL^T, no pivoting). Throws
/// NotPositiveDefinite when a pivot falls below 1e-12 times the largest
/// diagonal entry.
CholFactor modified_cholesky(const Matrix& sigma);

/// Does (L, D) satisfy the Theta_G invariants for this graph?
bool in_theta_g(const CholFactor& f, const Graph& g, double tol = 0.0);

/// Is sigma a member of P_G (symmetric, positive definite, zeros off E)?
bool in_pg(const Matrix& sigma, const Graph& g, double tol = 1e-12);

/// Inverse of a unit lower-triangular matrix by forward substitution.
/// The diagonal is assumed to be 1 and the upper triangle is ignored.
Matrix tri_inverse(const Matrix& l);

/// Inverse of a unit lower-triangular matrix evaluated literally as the
/// signed sum over strictly decreasing index paths. Exponential in m; serves
/// as a verification oracle. Throws DimensionCapExceeded above `cap`.
Matrix tri_inverse_pathsum(const Matrix& l, int cap = 12);

/// Indices w with L^{-1}_{vw} identically zero as a function of L in L_G:
/// all w > v, plus every w < v not reachable from v by a strictly
/// decreasing path through the sparsity pattern. v itself is excluded.
std::vector<int> structural_zero_row(const Graph& g, int v);

/// d L^{-1} / d L_{uv}: entry (i,j) = -L^{-1}_{iu} L^{-1}_{vj} for i > j.
/// Requires u > v and (u,v) in E.
Matrix dLinv_dL(const Matrix& l, int u, int v, const Graph& g);

/// Second derivative of tr((LDL^T)^{-1} U) in L_{uv}, L_{u'v}:
/// 2 (L^{-1} U L^{-T})_{vv} (LDL^T)^{-1}_{uu'}. Requires u, u' > v and both
/// edges present.
double trace_hessian_entry(const CholFactor& f, const Matrix& u_mat, int v, int u, int uprime,
                           const Graph& g);

/// Forward Jacobian determinant of psi: (L, D) -> Sigma, prod_j D_jj^{n_j}
/// with n_j the number of higher-labeled neighbors of j.
double jacobian_theta_to_sigma(const CholFactor& f, const Graph& g);
double log_jacobian_theta_to_sigma(const CholFactor& f, const Graph& g);

/// Incomplete symmetric matrix: entries meaningful on the edge set and the
/// diagonal only; everything else is stored as zero.
struct IncompleteMatrix {
  Matrix entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Projection kappa: keep edge and diagonal entries, drop the rest.
IncompleteMatrix incomplete_from_full(const Matrix& full, const Graph& g);

/// zeta: Q_G -> P_G. Returns the unique Sigma in P_G whose inverse completes
/// x, via sum_C [(x_C)^{-1}]^0 - sum_S [(x_S)^{-1}]^0 over the perfect
/// sequence. Throws CliqueNotPositiveDefinite.
Matrix completion_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec, int m);

/// |Jacobian| of zeta: prod_C |x_C|^{-|C|-1} prod_S |x_S|^{(|S|+1) nu(S)}.
double jacobian_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec);
double log_jacobian_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec);

/// The three indexed blocks U^{<i}, U^{<=i}, U^<_{.i} over N^<(i); empty
/// matrices when N^<(i) is empty.
struct PredecessorBlocks {
  std::vector<int> idx;  // N^<(i), ascending
  Matrix u_prec;         // |idx| x |idx|
  Matrix u_preceq;       // (|idx|+1) x (|idx|+1), i appended last
  Vector u_col;          // U_{k i}, k in idx
};
PredecessorBlocks submatrices(const Matrix& u, const Graph& g, int i);

}  // namespace cgwish
