#include "cgwish/linalg.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cgwish {

bool is_positive_definite(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  const Eigen::Index m = a.rows();
  Matrix l = Matrix::Zero(m, m);
  const double scale = std::max(a.diagonal().cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index j = 0; j < m; ++j) {
    double d = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > rel_tol * scale)) return false;
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < m; ++i) {
      double s = a(i, j) - (l.row(i).head(j) * l.row(j).head(j).transpose())(0, 0);
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

Matrix spd_inverse(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("spd_inverse: matrix is not positive definite");
  return llt.solve(Matrix::Identity(a.rows(), a.cols()));
}

double spd_logdet(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("spd_logdet: matrix is not positive definite");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

Vector spd_solve(const Matrix& a, const Vector& b) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("spd_solve: matrix is not positive definite");
  return llt.solve(b);
}

double general_det(const Matrix& a) {
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

Matrix principal_submatrix(const Matrix& a, const std::vector<int>& idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = a(idx[r], idx[c]);
  return out;
}

Vector column_slice(const Matrix& a, const std::vector<int>& idx, int j) {
  Vector out(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out(r) = a(idx[r], j);
  return out;
}

Vector sample_mvn(const Vector& mean, const Matrix& cov, RngStream& rng) {
  if (cov.rows() != mean.size() || cov.cols() != mean.size())
    throw DimensionMismatchError("sample_mvn: covariance/mean dimensions differ");
  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("sample_mvn: covariance is not positive definite");
  Vector z(mean.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
  return mean + llt.matrixL() * z;
}

Matrix parse_matrix_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) {
      std::string tok;
      ls.clear();
      ls >> tok;
      throw ParseError(origin + ":" + std::to_string(lineno) + ": bad matrix entry '" + tok + "'");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(origin + ": empty matrix");
  const std::size_t ncol = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != ncol)
      throw ParseError(origin + ": row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(ncol));
  Matrix a(rows.size(), ncol);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncol; ++c) a(r, c) = rows[r][c];
  return a;
}

Matrix read_matrix_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str(), path);
}

std::string format_matrix_text(const Matrix& a) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a(i, j);
    }
    out << '\n';
  }
  return out.str();
}

void write_matrix_text(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open matrix file for writing: " + path);
  out << format_matrix_text(a);
}

Matrix read_symmetric_matrix_text(const std::string& path, double tol) {
  Matrix a = read_matrix_text(path);
  if (a.rows() != a.cols())
    throw ParseError(path + ": expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  if (!is_symmetric(a, tol)) throw ParseError(path + ": matrix is not symmetric");
  return 0.5 * (a + a.transpose());
}

}  // namespace cgwish
