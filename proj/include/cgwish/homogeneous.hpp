#pragma once

#include <vector>

#include "cgwish/chol.hpp"
#include "cgwish/graph.hpp"
#include "cgwish/rng.hpp"
#include "cgwish/wishart.hpp"

namespace cgwish {

/// Bottom-up vertex layers of the Hasse diagram: A_1 = {i : N^<(i) empty},
/// A_k = {i : N^<(i) contained in earlier layers} minus earlier layers.
struct LayerSets {
  std::vector<std::vector<int>> layers;
};

/// Per-vertex coordinates that are mutually independent under the prior on
/// a Hasse-labeled homogeneous graph: the conditional variance D_ii and the
/// regression vector beta_i = (Sigma^{<i})^{-1} Sigma^<_{.i} (empty when
/// N^<(i) is empty).
struct GammaCoords {
  Vector d;
  std::vector<Vector> beta;
};

/// Result of the empirical hyper-Markov independence check.
struct HyperMarkovReport {
  double threshold = 0.0;              // 4 / sqrt(N)
  std::vector<double> max_abs_corr;    // per vertex i >= 1 (index i-1)
  std::vector<bool> flagged;           // max |r| above threshold
  bool any_flagged = false;
};

/// Throws NotHomogeneous when the graph is not homogeneous or its labeling
/// is not a Hasse scheme (the closed forms require V in S_H).
LayerSets layer_sets(const Graph& g);

GammaCoords to_gamma(const Matrix& sigma, const Graph& g);
Matrix from_gamma(const GammaCoords& gamma, const Graph& g);

/// Exact draw from pi_{U,alpha} on P_G via the independence decomposition.
/// Requires an integrable prior. Throws NotHomogeneous / NonIntegrable.
Matrix exact_sample(const PriorSpec& p, const Graph& g, RngStream& rng);

/// Closed-form log z_G(U, alpha). Finite iff alpha_i > |N^<(i)| + 2 for all
/// i (throws NonIntegrable otherwise). Empty-block convention |U^{<i}| = 1.
double log_normalizing_constant(const PriorSpec& p, const Graph& g);

/// Closed-form E[Sigma] by the layer recursion. Requires
/// alpha_i > |N^<(i)| + 4 (throws MomentDoesNotExist otherwise).
Matrix expected_sigma(const PriorSpec& p, const Graph& g);

/// Sample correlations between D_ii(Sigma) and the free entries of the
/// leading (i-1) block; flags |r| > 4/sqrt(N). Pearson correlation is an
/// independence proxy only.
HyperMarkovReport check_hyper_markov(const std::vector<Matrix>& samples, const Graph& g);

/// Per-vertex terms of the recursive tr(Sigma^{-1} U) expansion; they sum to
/// the trace. Throws NotHomogeneous.
std::vector<double> trace_decomposition(const Matrix& sigma, const Matrix& u, const Graph& g);

}  // namespace cgwish
