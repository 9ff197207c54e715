#include "cgwish/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace cgwish {

Graph::Graph(int m, std::vector<std::pair<int, int>> edges) : m_(m) {
  if (m < 1) throw InvalidParamsError("Graph: vertex count must be >= 1");
  adj_.assign(m, std::vector<bool>(m, false));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= m || v < 0 || v >= m)
      throw InvalidParamsError("Graph: edge endpoint out of range");
    if (u == v) throw InvalidParamsError("Graph: self-loops are not allowed");
    adj_[u][v] = adj_[v][u] = true;
  }
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (adj_[u][v]) edges_.emplace_back(u, v);
  nbrs_.assign(m, {});
  for (auto [u, v] : edges_) {
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != m_)
    throw InvalidParamsError("relabel: permutation size mismatch");
  std::vector<bool> seen(m_, false);
  for (int p : perm) {
    if (p < 0 || p >= m_ || seen[p]) throw InvalidParamsError("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Graph(m_, std::move(e));
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> pos(m_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : edges_)
    if (pos[u] >= 0 && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(verts.size()), std::move(e));
}

NeighborIndex neighbor_index(const Graph& g) {
  const int m = g.num_vertices();
  NeighborIndex idx;
  idx.nbrs.resize(m);
  idx.lower_nbrs.resize(m);
  idx.lower_count.assign(m, 0);
  idx.higher_count.assign(m, 0);
  for (int v = 0; v < m; ++v) {
    idx.nbrs[v] = g.neighbors(v);
    for (int u : idx.nbrs[v]) {
      if (u < v) idx.lower_nbrs[v].push_back(u);
      else ++idx.higher_count[v];
    }
    idx.lower_count[v] = static_cast<int>(idx.lower_nbrs[v].size());
  }
  return idx;
}

namespace {

// Maximum cardinality search. Visits all vertices; ties broken by largest
// label so that graphs already labeled by a perfect scheme map to themselves
// under perfect_vertex_order.
std::vector<int> mcs_visit_order(const Graph& g) {
  const int m = g.num_vertices();
  std::vector<int> weight(m, 0);
  std::vector<bool> visited(m, false);
  std::vector<int> order;
  order.reserve(m);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int v = 0; v < m; ++v) {
      if (visited[v]) continue;
      if (best == -1 || weight[v] > weight[best] || (weight[v] == weight[best] && v > best))
        best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  return order;
}

bool earlier_neighbors_form_cliques(const Graph& g, const std::vector<int>& visit_order) {
  const int m = g.num_vertices();
  std::vector<int> rank(m);
  for (int i = 0; i < m; ++i) rank[visit_order[i]] = i;
  for (int v = 0; v < m; ++v) {
    std::vector<int> prev;
    for (int u : g.neighbors(v))
      if (rank[u] < rank[v]) prev.push_back(u);
    for (std::size_t a = 0; a < prev.size(); ++a)
      for (std::size_t b = a + 1; b < prev.size(); ++b)
        if (!g.has_edge(prev[a], prev[b])) return false;
  }
  return true;
}

}  // namespace

bool is_decomposable(const Graph& g) {
  return earlier_neighbors_form_cliques(g, mcs_visit_order(g));
}

CliqueDecomposition clique_decomposition(const Graph& g) {
  const int m = g.num_vertices();
  const auto visit = mcs_visit_order(g);
  if (!earlier_neighbors_form_cliques(g, visit))
    throw NotDecomposableError("clique_decomposition: graph is not decomposable");

  std::vector<int> rank(m);
  for (int i = 0; i < m; ++i) rank[visit[i]] = i;

  // Candidate cliques {v} u {earlier-visited neighbors}; keep the maximal ones.
  std::vector<std::set<int>> cands;
  for (int v : visit) {
    std::set<int> c{v};
    for (int u : g.neighbors(v))
      if (rank[u] < rank[v]) c.insert(u);
    cands.push_back(std::move(c));
  }
  std::vector<std::set<int>> cliques;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cands.size() && maximal; ++j) {
      if (i == j) continue;
      if (cands[j].size() < cands[i].size()) continue;
      if (cands[j] == cands[i] && j < i) { maximal = false; break; }
      if (cands[j].size() > cands[i].size() &&
          std::includes(cands[j].begin(), cands[j].end(), cands[i].begin(), cands[i].end()))
        maximal = false;
    }
    if (maximal) cliques.push_back(cands[i]);
  }

  const int k = static_cast<int>(cliques.size());
  // Perfect order = connected expansion of the maximum-weight spanning tree of
  // the clique intersection graph (Prim). Disconnected components attach with
  // empty separators.
  std::vector<bool> used(k, false);
  std::vector<int> order;
  // start from the clique containing the first MCS-visited vertex
  int start = 0;
  for (int i = 0; i < k; ++i)
    if (cliques[i].count(visit[0])) { start = i; break; }
  used[start] = true;
  order.push_back(start);
  std::set<int> covered(cliques[start].begin(), cliques[start].end());
  std::vector<std::set<int>> seps;  // S_j aligned with order[1..]
  while (static_cast<int>(order.size()) < k) {
    int best = -1, best_w = -1;
    for (int i = 0; i < k; ++i) {
      if (used[i]) continue;
      std::set<int> inter;
      std::set_intersection(cliques[i].begin(), cliques[i].end(), covered.begin(), covered.end(),
                            std::inserter(inter, inter.begin()));
      const int w = static_cast<int>(inter.size());
      if (w > best_w || (w == best_w && (best == -1 || i < best))) {
        best = i;
        best_w = w;
      }
    }
    used[best] = true;
    order.push_back(best);
    std::set<int> inter;
    std::set_intersection(cliques[best].begin(), cliques[best].end(), covered.begin(),
                          covered.end(), std::inserter(inter, inter.begin()));
    seps.push_back(std::move(inter));
    covered.insert(cliques[best].begin(), cliques[best].end());
  }

  CliqueDecomposition dec;
  std::set<int> hist;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto& c = cliques[order[j]];
    dec.cliques.emplace_back(c.begin(), c.end());
    if (j > 0) {
      dec.separators.emplace_back(seps[j - 1].begin(), seps[j - 1].end());
      std::vector<int> res;
      for (int v : c)
        if (!hist.count(v)) res.push_back(v);
      dec.residuals.push_back(std::move(res));
    }
    hist.insert(c.begin(), c.end());
    dec.histories.emplace_back(hist.begin(), hist.end());
  }
  return dec;
}

std::vector<std::pair<std::vector<int>, int>> CliqueDecomposition::separator_multiplicities()
    const {
  std::map<std::vector<int>, int> mult;
  for (const auto& s : separators) ++mult[s];
  return {mult.begin(), mult.end()};
}

std::vector<int> perfect_vertex_order(const Graph& g) {
  const auto visit = mcs_visit_order(g);
  if (!earlier_neighbors_form_cliques(g, visit))
    throw NotDecomposableError("perfect_vertex_order: graph is not decomposable");
  const int m = g.num_vertices();
  // first visited gets the highest label
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[visit[i]] = m - 1 - i;
  return perm;
}

bool identity_in_SD(const Graph& g) {
  // Symbolic elimination in label order; a valid S_D ordering produces no
  // fill-in outside E.
  const int m = g.num_vertices();
  std::vector<std::set<int>> higher(m);
  for (auto [u, v] : g.edges()) higher[u].insert(v);  // u < v normalized
  for (int j = 0; j < m; ++j) {
    const std::vector<int> s(higher[j].begin(), higher[j].end());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (!g.has_edge(s[a], s[b])) return false;  // would be fill-in
        higher[s[a]].insert(s[b]);
      }
  }
  return true;
}

bool verify_order_in_SD(const Graph& g, const std::vector<int>& order) {
  return identity_in_SD(g.relabel(order));
}

namespace {

std::vector<std::set<int>> closed_neighborhoods(const Graph& g) {
  std::vector<std::set<int>> cl(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    cl[v].insert(v);
    for (int u : g.neighbors(v)) cl[v].insert(u);
  }
  return cl;
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool is_homogeneous(const Graph& g) {
  // cl(i) and cl(j) must be nested for every edge (i,j); equivalent to
  // decomposable with no induced 4-path.
  const auto cl = closed_neighborhoods(g);
  for (auto [u, v] : g.edges())
    if (!subset(cl[u], cl[v]) && !subset(cl[v], cl[u])) return false;
  return true;
}

HasseDiagram hasse_diagram(const Graph& g) {
  if (!is_homogeneous(g)) throw NotHomogeneousError("hasse_diagram: graph is not homogeneous");
  const int m = g.num_vertices();
  const auto cl = closed_neighborhoods(g);

  HasseDiagram h;
  h.class_index.assign(m, -1);
  for (int v = 0; v < m; ++v) {
    if (h.class_index[v] >= 0) continue;
    const int id = static_cast<int>(h.classes.size());
    std::vector<int> members;
    for (int u = v; u < m; ++u)
      if (h.class_index[u] < 0 && cl[u] == cl[v]) {
        h.class_index[u] = id;
        members.push_back(u);
      }
    h.classes.push_back(std::move(members));
  }

  const int k = static_cast<int>(h.classes.size());
  h.parent.assign(k, -1);
  h.weight.resize(k);
  for (int c = 0; c < k; ++c) {
    h.weight[c] = static_cast<int>(h.classes[c].size());
    const int rep = h.classes[c].front();
    // parent = strict superset class with the smallest closed neighborhood;
    // ancestors of a class form a chain in a homogeneous graph
    int best = -1;
    for (int p = 0; p < k; ++p) {
      if (p == c) continue;
      const int prep = h.classes[p].front();
      if (cl[rep].size() < cl[prep].size() && subset(cl[rep], cl[prep])) {
        if (best == -1 || cl[prep].size() < cl[h.classes[best].front()].size() ||
            (cl[prep].size() == cl[h.classes[best].front()].size() && p < best))
          best = p;
      }
    }
    h.parent[c] = best;
  }
  h.children.assign(k, {});
  for (int c = 0; c < k; ++c)
    if (h.parent[c] >= 0) h.children[h.parent[c]].push_back(c);
  h.depth.assign(k, 0);
  // parents always have strictly larger closed neighborhoods, so iterating in
  // decreasing cl-size order would work; a simple fixpoint is enough here
  for (int pass = 0; pass < k; ++pass)
    for (int c = 0; c < k; ++c)
      if (h.parent[c] >= 0) h.depth[c] = h.depth[h.parent[c]] + 1;
  return h;
}

int HasseDiagram::class_of(int v) const { return class_index[v]; }

std::vector<int> hasse_order(const Graph& g) {
  const auto h = hasse_diagram(g);
  const int m = g.num_vertices();
  const int k = static_cast<int>(h.classes.size());

  // Breadth-first from the roots, assigning label blocks in descending
  // order. Within a depth level, classes with larger members come first so
  // that an already Hasse-labeled graph maps to itself.
  std::vector<int> order_of_class;
  std::vector<int> frontier;
  for (int c = 0; c < k; ++c)
    if (h.parent[c] == -1) frontier.push_back(c);
  auto by_largest_member_desc = [&](int a, int b) {
    return h.classes[a].back() > h.classes[b].back();
  };
  std::sort(frontier.begin(), frontier.end(), by_largest_member_desc);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier) {
      order_of_class.push_back(c);
      for (int ch : h.children[c]) next.push_back(ch);
    }
    std::sort(next.begin(), next.end(), by_largest_member_desc);
    frontier = std::move(next);
  }

  std::vector<int> perm(m, -1);
  int next_label = m - 1;
  for (int c : order_of_class) {
    // class block gets labels [next_label - w + 1, next_label]; members in
    // ascending original order keep ascending labels
    const auto& mem = h.classes[c];
    const int w = static_cast<int>(mem.size());
    for (int i = 0; i < w; ++i) perm[mem[i]] = next_label - w + 1 + i;
    next_label -= w;
  }
  return perm;
}

bool identity_in_SH(const Graph& g) {
  if (!identity_in_SD(g)) return false;
  // entries of L^{-1} are signed sums over strictly decreasing paths, so the
  // zeros transfer iff no such path joins any non-adjacent pair
  const int m = g.num_vertices();
  for (int v = 1; v < m; ++v) {
    std::vector<bool> reach(m, false);
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(x))
        if (u < x && !reach[u]) {
          reach[u] = true;
          stack.push_back(u);
        }
    }
    for (int w = 0; w < v; ++w)
      if (reach[w] && !g.has_edge(v, w)) return false;
  }
  return true;
}

Graph parse_graph_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (m < 0) {
      if (first != "p") throw ParseError(where + ": expected header 'p <m>'");
      if (!(ls >> m) || m < 1) throw ParseError(where + ": bad vertex count");
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) throw ParseError(where + ": expected edge 'i j'");
    std::string extra;
    if (es >> extra) throw ParseError(where + ": trailing tokens after edge");
    if (u < 1 || u > m || v < 1 || v > m)
      throw ParseError(where + ": vertex label out of range 1.." + std::to_string(m));
    if (u == v) throw ParseError(where + ": self-loop");
    edges.emplace_back(u - 1, v - 1);
  }
  if (m < 0) throw ParseError(origin + ": missing 'p <m>' header");
  return Graph(m, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str(), path);
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open graph file for writing: " + path);
  out << format_graph_text(g);
}

Graph homogeneous_graph_from_hasse_tree(const std::vector<int>& parent,
                                        const std::vector<int>& weight) {
  const int k = static_cast<int>(parent.size());
  if (static_cast<int>(weight.size()) != k)
    throw InvalidParamsError("hasse tree: parent/weight size mismatch");
  int m = 0;
  for (int w : weight) {
    if (w < 1) throw InvalidParamsError("hasse tree: class weights must be >= 1");
    m += w;
  }
  std::vector<int> depth(k, 0);
  for (int pass = 0; pass < k; ++pass)
    for (int c = 0; c < k; ++c)
      if (parent[c] >= 0) depth[c] = depth[parent[c]] + 1;

  // Hasse labeling: label blocks descend breadth-first from the roots.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] < depth[b]; });
  std::vector<std::vector<int>> members(k);
  int next = m - 1;
  for (int c : order) {
    for (int i = 0; i < weight[c]; ++i) members[c].push_back(next - weight[c] + 1 + i);
    next -= weight[c];
  }

  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < members[c].size(); ++a)
      for (std::size_t b = a + 1; b < members[c].size(); ++b)
        edges.emplace_back(members[c][a], members[c][b]);
    for (int anc = parent[c]; anc >= 0; anc = parent[anc])
      for (int u : members[c])
        for (int v : members[anc]) edges.emplace_back(u, v);
  }
  return Graph(m, std::move(edges));
}

namespace {

// Random weighted tree with no node having exactly one child.
void random_tree_node(int budget, int parent_id, std::vector<int>& parent,
                      std::vector<int>& weight, RngStream& rng) {
  const int id = static_cast<int>(parent.size());
  parent.push_back(parent_id);
  int w = 1 + static_cast<int>(rng.uniform() * budget);
  if (w > budget) w = budget;
  if (budget - w == 1) w = budget;  // cannot split a remainder of 1 into >= 2 children
  weight.push_back(w);
  int rem = budget - w;
  if (rem == 0) return;
  // split rem into nparts >= 2 positive parts
  int nparts = 2 + static_cast<int>(rng.uniform() * 3);
  if (nparts > rem) nparts = rem;
  if (nparts < 2) nparts = 2;
  std::vector<int> parts(nparts, 1);
  for (int extra = rem - nparts; extra > 0; --extra)
    ++parts[static_cast<int>(rng.uniform() * nparts)];
  for (int p : parts) random_tree_node(p, id, parent, weight, rng);
}

}  // namespace

Graph random_homogeneous_graph(int m, RngStream& rng) {
  if (m < 1) throw InvalidParamsError("random_homogeneous_graph: m must be >= 1");
  std::vector<int> parent, weight;
  if (m >= 4 && rng.uniform() < 0.15) {
    const int m1 = 1 + static_cast<int>(rng.uniform() * (m - 2));
    random_tree_node(m1, -1, parent, weight, rng);
    random_tree_node(m - m1, -1, parent, weight, rng);
  } else {
    random_tree_node(m, -1, parent, weight, rng);
  }
  return homogeneous_graph_from_hasse_tree(parent, weight);
}

Graph random_decomposable_graph(int m, RngStream& rng, double edge_bias) {
  std::vector<std::vector<int>> higher(m);  // higher-labeled neighbors, each a clique
  std::vector<std::pair<int, int>> edges;
  for (int v = m - 2; v >= 0; --v) {
    const int w = v + 1 + static_cast<int>(rng.uniform() * (m - 1 - v));
    std::vector<int> cand{w};
    for (int u : higher[w]) cand.push_back(u);
    std::vector<int> chosen;
    for (int u : cand)
      if (rng.uniform() < edge_bias) chosen.push_back(u);
    for (int u : chosen) {
      edges.emplace_back(v, u);
      higher[v].push_back(u);
    }
  }
  return Graph(m, std::move(edges));
}

}  // namespace cgwish
