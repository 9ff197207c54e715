#include "cgwish/chol.hpp"

#include <algorithm>
#include <cmath>

namespace cgwish {

Matrix reconstruct(const CholFactor& f) {
  return f.L * f.D.asDiagonal() * f.L.transpose();
}

CholFactor modified_cholesky(const Matrix& sigma) {
  const Eigen::Index m = sigma.rows();
  if (sigma.cols() != m) throw DimensionMismatchError("modified_cholesky: matrix not square");
  CholFactor f{Matrix::Identity(m, m), Vector::Zero(m)};
  const double scale = std::max(sigma.diagonal().cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index j = 0; j < m; ++j) {
    double d = sigma(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= f.L(j, k) * f.L(j, k) * f.D(k);
    if (!(d > 1e-12 * scale))
      throw NotPositiveDefiniteError("modified_cholesky: pivot " + std::to_string(j) +
                                     " is not positive");
    f.D(j) = d;
    for (Eigen::Index i = j + 1; i < m; ++i) {
      double s = sigma(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= f.L(i, k) * f.L(j, k) * f.D(k);
      f.L(i, j) = s / d;
    }
  }
  return f;
}

bool in_theta_g(const CholFactor& f, const Graph& g, double tol) {
  const int m = f.dim();
  if (g.num_vertices() != m || f.L.rows() != m || f.L.cols() != m) return false;
  for (int i = 0; i < m; ++i) {
    if (!(f.D(i) > 0.0)) return false;
    if (std::abs(f.L(i, i) - 1.0) > tol) return false;
    for (int j = 0; j < m; ++j) {
      if (j > i && std::abs(f.L(i, j)) > tol) return false;
      if (j < i && !g.has_edge(i, j) && std::abs(f.L(i, j)) > tol) return false;
    }
  }
  return true;
}

bool in_pg(const Matrix& sigma, const Graph& g, double tol) {
  const int m = g.num_vertices();
  if (sigma.rows() != m || sigma.cols() != m) return false;
  if (!is_symmetric(sigma)) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (!g.has_edge(i, j) && std::abs(sigma(i, j)) > tol) return false;
  return is_positive_definite(sigma);
}

Matrix tri_inverse(const Matrix& l) {
  const Eigen::Index m = l.rows();
  Matrix n = Matrix::Identity(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j + 1; i < m; ++i) {
      double s = -l(i, j);
      for (Eigen::Index k = j + 1; k < i; ++k) s -= l(i, k) * n(k, j);
      n(i, j) = s;
    }
  return n;
}

namespace {

// sum over strictly decreasing paths i = t_1 > ... > t_r = j of
// (-1)^{r-1} prod L_{t_{k-1} t_k}
double pathsum_entry(const Matrix& l, int i, int j) {
  double total = 0.0;
  // DFS over all decreasing continuations; `prod` carries the sign
  struct Frame {
    int at;
    double signed_prod;
  };
  std::vector<Frame> stack{{i, 1.0}};
  while (!stack.empty()) {
    auto [at, sp] = stack.back();
    stack.pop_back();
    for (int k = j; k < at; ++k) {
      const double next = -sp * l(at, k);
      if (k == j) total += next;
      else stack.push_back({k, next});
    }
  }
  return total;
}

}  // namespace

Matrix tri_inverse_pathsum(const Matrix& l, int cap) {
  const int m = static_cast<int>(l.rows());
  if (m > cap)
    throw DimensionCapError("tri_inverse_pathsum: dimension " + std::to_string(m) +
                            " exceeds cap " + std::to_string(cap));
  Matrix n = Matrix::Identity(m, m);
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < i; ++j) n(i, j) = pathsum_entry(l, i, j);
  return n;
}

std::vector<int> structural_zero_row(const Graph& g, int v) {
  const int m = g.num_vertices();
  std::vector<bool> reach(m, false);
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(x))
      if (u < x && !reach[u]) {
        reach[u] = true;
        stack.push_back(u);
      }
  }
  std::vector<int> zeros;
  for (int w = 0; w < m; ++w) {
    if (w == v) continue;
    if (w > v || !reach[w]) zeros.push_back(w);
  }
  return zeros;
}

Matrix dLinv_dL(const Matrix& l, int u, int v, const Graph& g) {
  if (!(u > v)) throw InvalidParamsError("dLinv_dL: requires u > v");
  if (!g.has_edge(u, v)) throw EdgeNotPresentError("dLinv_dL: (u,v) is not an edge");
  const Eigen::Index m = l.rows();
  const Matrix n = tri_inverse(l);
  Matrix d = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < i; ++j) d(i, j) = -n(i, u) * n(v, j);
  return d;
}

double trace_hessian_entry(const CholFactor& f, const Matrix& u_mat, int v, int u, int uprime,
                           const Graph& g) {
  if (!(u > v) || !(uprime > v))
    throw InvalidParamsError("trace_hessian_entry: requires u, u' > v");
  if (!g.has_edge(u, v) || !g.has_edge(uprime, v))
    throw EdgeNotPresentError("trace_hessian_entry: (u,v) and (u',v) must be edges");
  const Matrix n = tri_inverse(f.L);
  const Vector row_v = n.row(v).transpose();
  const double cvv = row_v.dot(u_mat * row_v);
  // (LDL^T)^{-1}_{u u'} = sum_k N_{ku} N_{ku'} / D_k
  double omega = 0.0;
  for (Eigen::Index k = std::max(u, uprime); k < n.rows(); ++k)
    omega += n(k, u) * n(k, uprime) / f.D(k);
  return 2.0 * cvv * omega;
}

double log_jacobian_theta_to_sigma(const CholFactor& f, const Graph& g) {
  const auto idx = neighbor_index(g);
  double s = 0.0;
  for (int j = 0; j < f.dim(); ++j) s += idx.higher_count[j] * std::log(f.D(j));
  return s;
}

double jacobian_theta_to_sigma(const CholFactor& f, const Graph& g) {
  return std::exp(log_jacobian_theta_to_sigma(f, g));
}

IncompleteMatrix incomplete_from_full(const Matrix& full, const Graph& g) {
  const int m = g.num_vertices();
  if (full.rows() != m || full.cols() != m)
    throw DimensionMismatchError("incomplete_from_full: dimension mismatch");
  Matrix x = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    x(i, i) = full(i, i);
    for (int j : g.neighbors(i)) x(i, j) = full(i, j);
  }
  return {0.5 * (x + x.transpose())};
}

namespace {

Matrix clique_block_inverse(const IncompleteMatrix& x, const std::vector<int>& verts,
                            const char* what) {
  const Matrix block = principal_submatrix(x.entries, verts);
  Eigen::LLT<Matrix> llt(block);
  if (llt.info() != Eigen::Success)
    throw CliqueNotPositiveDefiniteError(std::string(what) + ": block is not positive definite");
  return llt.solve(Matrix::Identity(block.rows(), block.cols()));
}

double clique_block_logdet(const IncompleteMatrix& x, const std::vector<int>& verts,
                           const char* what) {
  if (verts.empty()) return 0.0;  // |x_empty| = 1
  const Matrix block = principal_submatrix(x.entries, verts);
  Eigen::LLT<Matrix> llt(block);
  if (llt.info() != Eigen::Success)
    throw CliqueNotPositiveDefiniteError(std::string(what) + ": block is not positive definite");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

Matrix completion_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec, int m) {
  Matrix sigma = Matrix::Zero(m, m);
  for (const auto& c : dec.cliques) {
    const Matrix inv = clique_block_inverse(x, c, "completion_qg_to_pg");
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b) sigma(c[a], c[b]) += inv(a, b);
  }
  for (const auto& s : dec.separators) {
    if (s.empty()) continue;
    const Matrix inv = clique_block_inverse(x, s, "completion_qg_to_pg");
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) sigma(s[a], s[b]) -= inv(a, b);
  }
  return sigma;
}

double log_jacobian_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec) {
  double s = 0.0;
  for (const auto& c : dec.cliques)
    s -= (static_cast<double>(c.size()) + 1.0) * clique_block_logdet(x, c, "jacobian_qg_to_pg");
  for (const auto& sep : dec.separators)
    s += (static_cast<double>(sep.size()) + 1.0) *
         clique_block_logdet(x, sep, "jacobian_qg_to_pg");
  return s;
}

double jacobian_qg_to_pg(const IncompleteMatrix& x, const CliqueDecomposition& dec) {
  return std::exp(log_jacobian_qg_to_pg(x, dec));
}

PredecessorBlocks submatrices(const Matrix& u, const Graph& g, int i) {
  PredecessorBlocks b;
  for (int j : g.neighbors(i))
    if (j < i) b.idx.push_back(j);
  const int k = static_cast<int>(b.idx.size());
  b.u_prec = principal_submatrix(u, b.idx);
  b.u_col = column_slice(u, b.idx, i);
  b.u_preceq = Matrix(k + 1, k + 1);
  b.u_preceq.topLeftCorner(k, k) = b.u_prec;
  b.u_preceq.block(0, k, k, 1) = b.u_col;
  b.u_preceq.block(k, 0, 1, k) = b.u_col.transpose();
  b.u_preceq(k, k) = u(i, i);
  return b;
}

}  // namespace cgwish
