#include "cgwish/presets.hpp"

namespace cgwish {

Graph yeast_graph() {
  // 0 GAL11, 1 GAL4, 2 GAL80, 3 GAL3, 4 GAL7, 5 GAL10, 6 GAL1, 7 GAL2
  return Graph(8, {{0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 3}, {1, 7}, {2, 3},
                   {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6},
                   {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

std::vector<std::string> yeast_gene_names() {
  return {"GAL11", "GAL4", "GAL80", "GAL3", "GAL7", "GAL10", "GAL1", "GAL2"};
}

Matrix yeast_covariance() {
  Matrix s(8, 8);
  // Lower triangle as published, with two entries repaired where the printed
  // table is inconsistent with the model fits reported alongside it: the
  // GAL80/GAL10 entry is +0.188 (sign) and the GAL7/GAL10 entry is 2.593.
  const double rows[8][8] = {
      {0.152, 0, 0, 0, 0, 0, 0, 0},
      {0.034, 0.130, 0, 0, 0, 0, 0, 0},
      {0.015, 0.039, 0.221, 0, 0, 0, 0, 0},
      {-0.055, 0.034, 0.073, 0.608, 0, 0, 0, 0},
      {-0.051, -0.053, 0.183, 0.722, 3.423, 0, 0, 0},
      {-0.048, -0.039, 0.188, 0.553, 2.593, 2.372, 0, 0},
      {-0.066, -0.061, 0.224, 0.517, 2.768, 2.409, 2.890, 0},
      {-0.119, -0.018, 0.208, 0.583, 2.547, 2.278, 2.514, 2.890}};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= i; ++j) s(i, j) = s(j, i) = rows[i][j];
  return s;
}

int yeast_sample_size() { return 134; }

std::vector<int> yeast_alternate_permutation() {
  // gene order GAL11, GAL4, GAL80, GAL10, GAL2, GAL3, GAL1, GAL7
  return {0, 1, 2, 5, 7, 3, 6, 4};
}

Graph sim50_graph() {
  // Hasse tree: root class of 2; three internal classes of 2; six leaf
  // classes of 7. 50 vertices, every internal node with >= 2 children.
  const std::vector<int> parent = {-1, 0, 0, 0, 1, 1, 2, 2, 3, 3};
  const std::vector<int> weight = {2, 2, 2, 2, 7, 7, 7, 7, 7, 7};
  return homogeneous_graph_from_hasse_tree(parent, weight);
}

Matrix sim50_sigma() {
  const Graph g = sim50_graph();
  const int m = g.num_vertices();
  Matrix s = 50.0 * Matrix::Identity(m, m);
  for (auto [u, v] : g.edges()) s(u, v) = s(v, u) = 1.0;
  return s;
}

}  // namespace cgwish
