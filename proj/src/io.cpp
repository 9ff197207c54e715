#include "cgwish/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cgwish/homogeneous.hpp"

namespace cgwish {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": bad number '" + s + "'");
  }
}

}  // namespace

std::string PriorConfig::describe() const {
  std::ostringstream out;
  switch (u_mode) {
    case UMode::kZero: out << "u = zero"; break;
    case UMode::kScaledIdentity: out << "u = scaled-identity"; break;
    case UMode::kScaledIdentityFixed: out << "u = scaled-identity:" << u_scale; break;
    case UMode::kFile: out << "u = file:" << u_path; break;
  }
  out << "; ";
  switch (alpha_mode) {
    case AlphaMode::kList: {
      out << "alpha = list:";
      for (std::size_t i = 0; i < alpha_values.size(); ++i)
        out << (i ? "," : "") << alpha_values[i];
      break;
    }
    case AlphaMode::kOffset: out << "alpha = offset:" << alpha_scalar; break;
    case AlphaMode::kDelta: out << "alpha = delta:" << alpha_scalar; break;
  }
  return out.str();
}

PriorConfig parse_prior_config(const std::string& text, const std::string& origin) {
  PriorConfig cfg;
  bool saw_u = false, saw_alpha = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "u") {
      saw_u = true;
      if (val == "zero") {
        cfg.u_mode = PriorConfig::UMode::kZero;
      } else if (val == "scaled-identity") {
        cfg.u_mode = PriorConfig::UMode::kScaledIdentity;
      } else if (val.rfind("scaled-identity:", 0) == 0) {
        cfg.u_mode = PriorConfig::UMode::kScaledIdentityFixed;
        cfg.u_scale = parse_double(val.substr(16), where);
      } else if (val.rfind("file:", 0) == 0) {
        cfg.u_mode = PriorConfig::UMode::kFile;
        cfg.u_path = val.substr(5);
        if (cfg.u_path.empty()) throw ParseError(where + ": empty path in 'u = file:'");
      } else {
        throw ParseError(where + ": unknown u spec '" + val + "'");
      }
    } else if (key == "alpha") {
      saw_alpha = true;
      if (val.rfind("list:", 0) == 0) {
        cfg.alpha_mode = PriorConfig::AlphaMode::kList;
        std::istringstream vs(val.substr(5));
        std::string tok;
        while (std::getline(vs, tok, ','))
          cfg.alpha_values.push_back(parse_double(trim(tok), where));
        if (cfg.alpha_values.empty()) throw ParseError(where + ": empty alpha list");
      } else if (val.rfind("offset:", 0) == 0) {
        cfg.alpha_mode = PriorConfig::AlphaMode::kOffset;
        cfg.alpha_scalar = parse_double(val.substr(7), where);
      } else if (val.rfind("delta:", 0) == 0) {
        cfg.alpha_mode = PriorConfig::AlphaMode::kDelta;
        cfg.alpha_scalar = parse_double(val.substr(6), where);
      } else {
        throw ParseError(where + ": unknown alpha spec '" + val + "'");
      }
    } else {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
  if (!saw_u || !saw_alpha) throw ParseError(origin + ": config must set both 'u' and 'alpha'");
  return cfg;
}

PriorConfig read_prior_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open prior config: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_prior_config(buf.str(), path);
}

PriorSpec resolve_prior(const PriorConfig& cfg, const Graph& g,
                        const std::optional<DataSummary>& data) {
  const int m = g.num_vertices();
  PriorSpec p;
  switch (cfg.u_mode) {
    case PriorConfig::UMode::kZero:
      p.u = Matrix::Zero(m, m);
      break;
    case PriorConfig::UMode::kScaledIdentity: {
      if (!data)
        throw InvalidParamsError("prior 'u = scaled-identity' needs data to set the scale");
      p.u = (data->s.trace() / m) * Matrix::Identity(m, m);
      break;
    }
    case PriorConfig::UMode::kScaledIdentityFixed:
      p.u = cfg.u_scale * Matrix::Identity(m, m);
      break;
    case PriorConfig::UMode::kFile:
      p.u = read_symmetric_matrix_text(cfg.u_path);
      if (p.u.rows() != m)
        throw DimensionMismatchError("prior U dimension " + std::to_string(p.u.rows()) +
                                     " does not match graph size " + std::to_string(m));
      break;
  }
  switch (cfg.alpha_mode) {
    case PriorConfig::AlphaMode::kList: {
      if (static_cast<int>(cfg.alpha_values.size()) != m)
        throw DimensionMismatchError("alpha list length does not match graph size");
      p.alpha = Eigen::Map<const Vector>(cfg.alpha_values.data(), m);
      break;
    }
    case PriorConfig::AlphaMode::kOffset:
      p.alpha = alpha_from_offset(cfg.alpha_scalar, g);
      break;
    case PriorConfig::AlphaMode::kDelta:
      p.alpha = alpha_from_delta(cfg.alpha_scalar, g);
      break;
  }
  return p;
}

Matrix read_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open csv file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && has_header) continue;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(t);
    std::string tok;
    while (std::getline(ls, tok, ','))
      row.push_back(parse_double(trim(tok), path + ":" + std::to_string(lineno)));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InsufficientDataError(path + ": no observations");
  const std::size_t ncol = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != ncol)
      throw ParseError(path + ": row " + std::to_string(r + (has_header ? 2 : 1)) +
                       " has a different number of fields");
  Matrix y(rows.size(), ncol);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncol; ++c) y(r, c) = rows[r][c];
  return y;
}

void write_csv(const std::string& path, const Matrix& y) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open csv file for writing: " + path);
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      if (j) out << ',';
      out << y(i, j);
    }
    out << '\n';
  }
}

Matrix permute_symmetric(const Matrix& a, const std::vector<int>& perm) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index u = 0; u < a.rows(); ++u)
    for (Eigen::Index v = 0; v < a.cols(); ++v) out(perm[u], perm[v]) = a(u, v);
  return out;
}

Matrix permute_columns(const Matrix& y, const std::vector<int>& perm) {
  Matrix out(y.rows(), y.cols());
  for (Eigen::Index v = 0; v < y.cols(); ++v) out.col(perm[v]) = y.col(v);
  return out;
}

std::vector<int> invert_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inv[perm[v]] = static_cast<int>(v);
  return inv;
}

std::string format_permutation(const std::vector<int>& perm) {
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) out << (i ? " " : "") << perm[i] + 1;
  return out.str();
}

namespace {

void emit_matrix_block(std::ostringstream& out, const std::string& name, const Matrix& a) {
  out << "[" << name << "]\n";
  out << std::setprecision(10);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a(i, j);
    }
    out << '\n';
  }
  out << "[end]\n";
}

}  // namespace

std::string render_fit_report(const FitReportInputs& in) {
  std::ostringstream out;
  out << "# cgwish fit report\n";
  out << "graph = " << in.graph_path << "\n";
  out << "data = " << in.data_desc << "\n";
  out << "prior = " << in.prior_desc << "\n";
  out << "centered = " << (in.centered ? "true" : "false") << "\n";
  out << "ordering_policy = " << in.ordering_policy << "\n";
  out << "ordering = " << format_permutation(in.ordering) << "\n";
  out << "burnin = " << in.gibbs.burnin << "\n";
  out << "iters = " << in.gibbs.iters << "\n";
  out << "thin = " << in.gibbs.thin << "\n";
  out << "chains = " << in.gibbs.chains << "\n";
  out << "seed = " << in.gibbs.seed << "\n";
  emit_matrix_block(out, "posterior_mean", in.result.mean);
  emit_matrix_block(out, "mc_standard_error", in.result.mc_se);
  out << std::setprecision(6);
  out << "batch_drift = " << in.result.batch_drift << "\n";
  out << "drift_warning = " << (in.result.drift_warning ? "true" : "false") << "\n";
  if (in.oracle_mean) {
    emit_matrix_block(out, "closed_form_mean", *in.oracle_mean);
    out << "gibbs_vs_closed_form_rel_error = " << std::setprecision(6) << in.oracle_rel_error
        << "\n";
  }
  out << "wall_seconds = " << std::setprecision(3) << in.result.wall_seconds << "\n";
  return out.str();
}

std::string render_oracle_report(const Graph& g, double log_z,
                                 const Matrix& expected,
                                 const std::vector<std::vector<int>>& layers,
                                 const std::string& graph_path, const std::string& prior_desc,
                                 const std::vector<int>& ordering_used) {
  std::ostringstream out;
  out << "# cgwish oracle report\n";
  out << "graph = " << graph_path << "\n";
  out << "prior = " << prior_desc << "\n";
  out << "ordering = " << format_permutation(ordering_used) << "\n";
  out << "vertices = " << g.num_vertices() << "\n";
  out << std::setprecision(12);
  out << "log_normalizing_constant = " << log_z << "\n";
  emit_matrix_block(out, "expected_sigma", expected);
  out << "[layer_sets]\n";
  for (std::size_t k = 0; k < layers.size(); ++k) {
    out << "A" << (k + 1) << " =";
    for (int v : layers[k]) out << ' ' << v + 1;
    out << '\n';
  }
  out << "[end]\n";
  return out.str();
}

std::string render_check_graph_report(const Graph& g, const std::string& path) {
  std::ostringstream out;
  out << "# cgwish check-graph report\n";
  out << "graph = " << path << "\n";
  out << "vertices = " << g.num_vertices() << "\n";
  out << "edges = " << g.num_edges() << "\n";
  const bool dec = is_decomposable(g);
  const bool hom = is_homogeneous(g);
  out << "decomposable = " << (dec ? "yes" : "no") << "\n";
  out << "homogeneous = " << (hom ? "yes" : "no") << "\n";
  if (!dec) return out.str();
  out << "labeling_in_SD = " << (identity_in_SD(g) ? "yes" : "no") << "\n";
  const auto dec_obj = clique_decomposition(g);
  out << "[cliques]\n";
  for (std::size_t j = 0; j < dec_obj.cliques.size(); ++j) {
    out << "C" << (j + 1) << " =";
    for (int v : dec_obj.cliques[j]) out << ' ' << v + 1;
    out << '\n';
  }
  out << "[end]\n";
  out << "[separators]\n";
  for (const auto& [sep, mult] : dec_obj.separator_multiplicities()) {
    out << "S =";
    if (sep.empty()) out << " (empty)";
    for (int v : sep) out << ' ' << v + 1;
    out << "  nu = " << mult << '\n';
  }
  out << "[end]\n";
  out << "perfect_order = " << format_permutation(perfect_vertex_order(g)) << "\n";
  if (hom) {
    out << "labeling_in_SH = " << (identity_in_SH(g) ? "yes" : "no") << "\n";
    out << "hasse_order = " << format_permutation(hasse_order(g)) << "\n";
    const auto h = hasse_diagram(g);
    out << "[hasse_diagram]\n";
    for (std::size_t c = 0; c < h.classes.size(); ++c) {
      out << "class " << (c + 1) << " = {";
      for (std::size_t i = 0; i < h.classes[c].size(); ++i)
        out << (i ? " " : "") << h.classes[c][i] + 1;
      out << "} parent = " << (h.parent[c] >= 0 ? std::to_string(h.parent[c] + 1) : "-")
          << " depth = " << h.depth[c] << "\n";
    }
    out << "[end]\n";
  }
  return out.str();
}

}  // namespace cgwish
