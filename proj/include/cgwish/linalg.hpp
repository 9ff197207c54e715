#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cgwish/errors.hpp"
#include "cgwish/rng.hpp"

namespace cgwish {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline bool is_symmetric(const Matrix& a, double tol = 1e-9) {
  if (a.rows() != a.cols()) return false;
  return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + a.cwiseAbs().maxCoeff());
}

/// SPD test via unpivoted Cholesky with a scale-relative pivot tolerance.
bool is_positive_definite(const Matrix& a, double rel_tol = 1e-12);

/// Inverse of a symmetric positive definite matrix (LLT based).
/// Throws NotPositiveDefinite.
Matrix spd_inverse(const Matrix& a);

/// log det of a symmetric positive definite matrix. Throws NotPositiveDefinite.
double spd_logdet(const Matrix& a);

/// Solve A x = b for SPD A. Throws NotPositiveDefinite.
Vector spd_solve(const Matrix& a, const Vector& b);

/// Determinant of a general square matrix (partial-pivot LU).
double general_det(const Matrix& a);

/// Extract the principal submatrix over `rows` (same set for columns).
Matrix principal_submatrix(const Matrix& a, const std::vector<int>& idx);

/// Column slice a(idx, j).
Vector column_slice(const Matrix& a, const std::vector<int>& idx, int j);

/// Draw from N(mean, cov). cov must be SPD.
Vector sample_mvn(const Vector& mean, const Matrix& cov, RngStream& rng);

/// Matrix text format: whitespace-separated entries, one row per line.
/// Blank lines and lines starting with '#' are skipped.
Matrix read_matrix_text(const std::string& path);
Matrix parse_matrix_text(const std::string& text, const std::string& origin = "<string>");
void write_matrix_text(const std::string& path, const Matrix& a);
std::string format_matrix_text(const Matrix& a);

/// Read a matrix and validate symmetry to `tol` (scale-relative).
Matrix read_symmetric_matrix_text(const std::string& path, double tol = 1e-9);

}  // namespace cgwish
