#pragma once

#include <string>
#include <vector>

#include "cgwish/errors.hpp"
#include "cgwish/rng.hpp"

namespace cgwish {

/// Ordered undirected graph on vertices 0..m-1. The vertex labels are
/// semantic: they define the row/column order used by every matrix the
/// library touches, so two graphs with the same edge set but different
/// labelings are different objects. Immutable after construction.
class Graph {
 public:
  Graph(int m, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return m_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const { return u != v && adj_[u][v]; }

  /// Edges normalized as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Sorted neighbor list of v.
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

  /// Relabel: vertex v becomes perm[v]. perm must be a permutation of 0..m-1.
  Graph relabel(const std::vector<int>& perm) const;

  /// Induced subgraph on the given (sorted ascending) vertex set; vertices are
  /// relabeled 0..k-1 preserving relative order.
  Graph induced(const std::vector<int>& verts) const;

 private:
  int m_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> nbrs_;
};

/// N(i), N^<(i) (strictly lower-labeled neighbors), and n_i (count of
/// strictly higher-labeled neighbors) for every vertex.
struct NeighborIndex {
  std::vector<std::vector<int>> nbrs;        // N(i), ascending
  std::vector<std::vector<int>> lower_nbrs;  // N^<(i), ascending
  std::vector<int> lower_count;              // |N^<(i)|
  std::vector<int> higher_count;             // n_i = |{j > i : (i,j) in E}|
};

NeighborIndex neighbor_index(const Graph& g);

/// Perfect clique order with histories, separators (with multiplicities) and
/// residuals. Index j of `separators` pairs with cliques[j+1].
struct CliqueDecomposition {
  std::vector<std::vector<int>> cliques;     // C_1..C_k, each sorted
  std::vector<std::vector<int>> separators;  // S_2..S_k (S_j = H_{j-1} n C_j)
  std::vector<std::vector<int>> histories;   // H_1..H_k
  std::vector<std::vector<int>> residuals;   // R_2..R_k
  /// Distinct separators with their multiplicities nu(S).
  std::vector<std::pair<std::vector<int>, int>> separator_multiplicities() const;
};

/// Rooted forest of twin classes (equal closed neighborhoods).
struct HasseDiagram {
  std::vector<std::vector<int>> classes;  // members, sorted ascending
  std::vector<int> parent;                // class index, -1 for roots
  std::vector<std::vector<int>> children;
  std::vector<int> depth;     // root depth 0
  std::vector<int> weight;    // w(class) = |class|
  int class_of(int v) const;  // class index containing vertex v

  std::vector<int> class_index;  // per-vertex class id
};

/// Chordality test: maximum cardinality search + perfect elimination check.
bool is_decomposable(const Graph& g);

/// Requires is_decomposable(g); throws NotDecomposable otherwise.
CliqueDecomposition clique_decomposition(const Graph& g);

/// A permutation sigma (new label of v = sigma[v]) whose relabeled graph has
/// the no-fill-in property, i.e. sigma lies in S_D. Descending labels over
/// C_1, R_2, ..., R_k. Throws NotDecomposable.
std::vector<int> perfect_vertex_order(const Graph& g);

/// Structural test: does relabeling by `order` put the graph in S_D?
/// Symbolic Cholesky of the relabeled pattern must produce no fill-in.
bool verify_order_in_SD(const Graph& g, const std::vector<int>& order);

/// Is the graph, under its own labeling, already in S_D?
bool identity_in_SD(const Graph& g);

/// Homogeneous = decomposable with no induced 4-path. Implemented via the
/// closed-neighborhood comparability characterization (every edge (i,j) has
/// cl(i) and cl(j) nested).
bool is_homogeneous(const Graph& g);

/// Throws NotHomogeneous.
HasseDiagram hasse_diagram(const Graph& g);

/// Hasse perfect vertex elimination scheme: labels descend from the roots,
/// breadth first; ties broken by smallest original member, ascending original
/// label within a class. Result lies in S_H. Throws NotHomogeneous.
std::vector<int> hasse_order(const Graph& g);

/// Is the identity labeling a member of S_H? (S_D membership plus the
/// requirement that structural zeros of L transfer to L^{-1}.)
bool identity_in_SH(const Graph& g);

/// Graph file format: 'p <m>' header, one 'i j' edge per line (1-indexed),
/// '#' comments.
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(const std::string& text, const std::string& origin = "<string>");
void write_graph_file(const std::string& path, const Graph& g);
std::string format_graph_text(const Graph& g);

/// Random homogeneous graph from a random weighted Hasse tree (no node with
/// exactly one child); the resulting labeling is a Hasse scheme. Used by the
/// test suites and the simulation generator.
Graph random_homogeneous_graph(int m, RngStream& rng);

/// Random decomposable graph whose identity labeling is already in S_D.
/// Built by attaching each vertex (from high labels down) to a clique among
/// the higher-labeled vertices. `edge_bias` in [0,1] controls density.
Graph random_decomposable_graph(int m, RngStream& rng, double edge_bias = 0.5);

/// Expand a Hasse forest (parent[] over classes, -1 for roots; weights >= 1)
/// into the corresponding homogeneous graph, labeled by the Hasse scheme.
Graph homogeneous_graph_from_hasse_tree(const std::vector<int>& parent,
                                        const std::vector<int>& weight);

}  // namespace cgwish
