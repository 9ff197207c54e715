#pragma once

#include <string>
#include <vector>

#include "cgwish/graph.hpp"
#include "cgwish/linalg.hpp"

namespace cgwish {

/// Yeast galactose-utilization covariance graph (8 genes), primary ordering
/// GAL11, GAL4, GAL80, GAL3, GAL7, GAL10, GAL1, GAL2.
Graph yeast_graph();
std::vector<std::string> yeast_gene_names();

/// Published 8x8 empirical covariance (centered, 1/n convention), n = 134.
Matrix yeast_covariance();
int yeast_sample_size();

/// Alternate published ordering GAL11, GAL4, GAL80, GAL10, GAL2, GAL3, GAL1,
/// GAL7, as a permutation of the primary labels.
std::vector<int> yeast_alternate_permutation();

/// Fixed 50-vertex homogeneous benchmark graph (Hasse labeled) and its true
/// covariance: diagonal 50, off-diagonal 1 on the edges.
Graph sim50_graph();
Matrix sim50_sigma();

}  // namespace cgwish
