#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgwish/gibbs.hpp"
#include "cgwish/graph.hpp"
#include "cgwish/linalg.hpp"
#include "cgwish/wishart.hpp"

namespace cgwish {

/// Prior description from a 'key = value' config file:
///   u = zero | scaled-identity | scaled-identity:<c> | file:<path>
///   alpha = list:<v1,...,vm> | offset:<c> | delta:<d>
/// 'scaled-identity' without an argument takes (tr S / m) I from the data;
/// 'offset' means alpha_i = c + |N^<(i)|, 'delta' the single-shape family
/// alpha_i = d + 2m - 2 n_i.
struct PriorConfig {
  enum class UMode { kZero, kScaledIdentity, kScaledIdentityFixed, kFile };
  enum class AlphaMode { kList, kOffset, kDelta };
  UMode u_mode = UMode::kZero;
  double u_scale = 0.0;
  std::string u_path;
  AlphaMode alpha_mode = AlphaMode::kOffset;
  std::vector<double> alpha_values;
  double alpha_scalar = 0.0;
  std::string describe() const;
};

PriorConfig parse_prior_config(const std::string& text, const std::string& origin = "<string>");
PriorConfig read_prior_config(const std::string& path);

/// Materialize (U, alpha) for a given graph; data is required only for the
/// data-scaled identity mode.
PriorSpec resolve_prior(const PriorConfig& cfg, const Graph& g,
                        const std::optional<DataSummary>& data);

/// CSV: comma-separated, one observation per row, optional header row.
Matrix read_csv(const std::string& path, bool has_header);
void write_csv(const std::string& path, const Matrix& y);

/// Apply permutation perm (new label of v = perm[v]) to rows/columns of a
/// symmetric matrix: out(perm[u], perm[v]) = a(u, v).
Matrix permute_symmetric(const Matrix& a, const std::vector<int>& perm);
/// Permute data columns: out column perm[v] = y column v.
Matrix permute_columns(const Matrix& y, const std::vector<int>& perm);
std::vector<int> invert_permutation(const std::vector<int>& perm);

/// One-based rendering of a permutation, "3 1 2 ...".
std::string format_permutation(const std::vector<int>& perm);

struct FitReportInputs {
  std::string graph_path;
  std::string data_desc;
  std::string prior_desc;
  std::string ordering_policy;
  std::vector<int> ordering;  // permutation actually used (identity if none)
  bool centered = false;
  GibbsConfig gibbs;
  FitResult result;                  // in original vertex coordinates
  std::optional<Matrix> oracle_mean;  // homogeneous graphs only
  double oracle_rel_error = 0.0;
};

/// Deterministic report body plus a trailing wall-time line; rerunning with
/// the same seed and config reproduces the body byte for byte.
std::string render_fit_report(const FitReportInputs& in);

std::string render_oracle_report(const Graph& g, double log_z,
                                 const Matrix& expected, const std::vector<std::vector<int>>& layers,
                                 const std::string& graph_path, const std::string& prior_desc,
                                 const std::vector<int>& ordering_used);

std::string render_check_graph_report(const Graph& g, const std::string& path);

}  // namespace cgwish
