// SPDX-License-Identifier: Apache-2.0
#include "gnncg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace gnncg {

namespace {

AdjIndex build_index(std::uint64_t num_vertices, const std::vector<VertexId>& key_vertex,
                     const std::vector<VertexId>& other_vertex) {
  AdjIndex idx;
  idx.offsets.assign(num_vertices + 1, 0);
  const std::uint64_t num_edges = key_vertex.size();
  for (std::uint64_t e = 0; e < num_edges; ++e) idx.offsets[key_vertex[e] + 1]++;
  for (std::uint64_t v = 0; v < num_vertices; ++v) idx.offsets[v + 1] += idx.offsets[v];
  idx.entries.resize(num_edges);
  std::vector<std::uint64_t> cursor(idx.offsets.begin(), idx.offsets.end() - 1);
  // Filling in ascending edge id keeps every row sorted by edge id.
  for (std::uint64_t e = 0; e < num_edges; ++e) {
    idx.entries[cursor[key_vertex[e]]++] = AdjEntry{other_vertex[e], static_cast<EdgeId>(e)};
  }
  return idx;
}

}  // namespace

Graph::Graph(std::uint64_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : num_vertices_(num_vertices), num_edges_(edges.size()) {
  edge_src_.resize(num_edges_);
  edge_dst_.resize(num_edges_);
  for (std::uint64_t e = 0; e < num_edges_; ++e) {
    if (edges[e].first >= num_vertices_ || edges[e].second >= num_vertices_) {
      throw GraphError("edge endpoint out of range");
    }
    edge_src_[e] = edges[e].first;
    edge_dst_[e] = edges[e].second;
  }
  csr_dst_ = build_index(num_vertices_, edge_dst_, edge_src_);
  csc_src_ = build_index(num_vertices_, edge_src_, edge_dst_);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    s.max_in_degree = std::max(s.max_in_degree, g.in_degree(v));
    s.max_out_degree = std::max(s.max_out_degree, g.out_degree(v));
  }
  s.mean_in_degree = g.num_vertices() == 0
                         ? 0.0
                         : static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
  return s;
}

namespace {

long long parse_id(const std::string& token, std::uint64_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw GraphError("parse error at line " + std::to_string(line_no) + ": bad id '" + token + "'");
  }
  if (value < 0) {
    throw GraphError("parse error at line " + std::to_string(line_no) + ": negative id");
  }
  return value;
}

}  // namespace

Graph load_edge_list(const std::string& path, bool expand_undirected) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);

  std::vector<std::pair<VertexId, VertexId>> edges;
  long long max_id = -1;
  long long header_vertices = -1;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string word;
      if (hs >> word && word == "vertices") {
        long long n;
        if (hs >> n && n >= 0) header_vertices = n;
      }
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw GraphError("parse error at line " + std::to_string(line_no) + ": expected 'src dst'");
    }
    const long long u = parse_id(a, line_no);
    const long long v = parse_id(b, line_no);
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (expand_undirected) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(u));
  }
  std::uint64_t num_vertices = static_cast<std::uint64_t>(max_id + 1);
  if (header_vertices >= 0) {
    if (header_vertices < max_id + 1) throw GraphError("header vertex count below max id");
    num_vertices = static_cast<std::uint64_t>(header_vertices);
  }
  return Graph(num_vertices, std::move(edges));
}

Graph load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0 ||
      line.find("coordinate") == std::string::npos || line.find("pattern") == std::string::npos) {
    throw GraphError("not a MatrixMarket coordinate pattern file: " + path);
  }
  std::uint64_t line_no = 1;
  // Skip remaining comments, then read "rows cols nnz".
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream hs(line);
  long long rows, cols, nnz;
  if (!(hs >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
    throw GraphError("parse error at line " + std::to_string(line_no) + ": bad size header");
  }
  if (rows != cols) throw GraphError("adjacency matrix must be square");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    long long i, j;
    if (!(ls >> i >> j)) {
      throw GraphError("parse error at line " + std::to_string(line_no) + ": expected 'i j'");
    }
    if (i < 1 || j < 1 || i > rows || j > cols) {
      throw GraphError("parse error at line " + std::to_string(line_no) + ": index out of range");
    }
    edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
  }
  if (edges.size() != static_cast<std::size_t>(nnz)) {
    throw GraphError("entry count does not match header nnz");
  }
  return Graph(static_cast<std::uint64_t>(rows), std::move(edges));
}

Graph generate_synthetic(SyntheticKind kind, const SyntheticParams& p) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  switch (kind) {
    case SyntheticKind::kErdosRenyi: {
      if (p.edge_prob < 0.0 || p.edge_prob > 1.0) {
        throw GraphError("erdos_renyi: probability must be in [0,1]");
      }
      std::mt19937 rng(static_cast<std::uint32_t>(p.seed));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      for (std::uint64_t u = 0; u < p.num_vertices; ++u) {
        for (std::uint64_t v = 0; v < p.num_vertices; ++v) {
          if (u == v) continue;
          if (unif(rng) < p.edge_prob) {
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
          }
        }
      }
      break;
    }
    case SyntheticKind::kKRegularIn: {
      if (p.k >= p.num_vertices) throw GraphError("k_regular_in: requires k < V");
      std::mt19937 rng(static_cast<std::uint32_t>(p.seed));
      std::vector<VertexId> pool(p.num_vertices);
      for (std::uint64_t i = 0; i < p.num_vertices; ++i) pool[i] = static_cast<VertexId>(i);
      for (std::uint64_t v = 0; v < p.num_vertices; ++v) {
        // Partial Fisher-Yates draw of k distinct sources != v.
        std::vector<VertexId> candidates = pool;
        std::swap(candidates[v], candidates.back());
        candidates.pop_back();
        for (std::uint64_t i = 0; i < p.k; ++i) {
          std::uniform_int_distribution<std::uint64_t> pick(i, candidates.size() - 1);
          std::swap(candidates[i], candidates[pick(rng)]);
          edges.emplace_back(candidates[i], static_cast<VertexId>(v));
        }
      }
      break;
    }
    case SyntheticKind::kStar: {
      if (p.num_vertices == 0) throw GraphError("star: requires V >= 1");
      if (p.multiplicity == 0) throw GraphError("star: multiplicity must be >= 1");
      for (std::uint64_t m = 0; m < p.multiplicity; ++m) {
        for (std::uint64_t v = 1; v < p.num_vertices; ++v) {
          edges.emplace_back(static_cast<VertexId>(v), 0);
        }
      }
      break;
    }
  }
  return Graph(p.num_vertices, std::move(edges));
}

Graph generate_synthetic(const std::string& descriptor, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ds(descriptor);
  while (std::getline(ds, token, ':')) parts.push_back(token);
  if (parts.empty()) throw GraphError("empty synthetic descriptor");

  SyntheticParams p;
  p.seed = seed;
  const std::string& kind = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() < n + 1) {
      throw GraphError("synthetic descriptor '" + descriptor + "': expected " + std::to_string(n) +
                       " parameters");
    }
  };
  try {
    if (kind == "erdos_renyi") {
      need(2);
      p.num_vertices = std::stoull(parts[1]);
      p.edge_prob = std::stod(parts[2]);
      return generate_synthetic(SyntheticKind::kErdosRenyi, p);
    }
    if (kind == "k_regular_in") {
      need(2);
      p.num_vertices = std::stoull(parts[1]);
      p.k = std::stoull(parts[2]);
      return generate_synthetic(SyntheticKind::kKRegularIn, p);
    }
    if (kind == "star") {
      need(1);
      p.num_vertices = std::stoull(parts[1]);
      if (parts.size() > 2) p.multiplicity = std::stoull(parts[2]);
      return generate_synthetic(SyntheticKind::kStar, p);
    }
  } catch (const std::invalid_argument&) {
    throw GraphError("synthetic descriptor '" + descriptor + "': bad number");
  } catch (const std::out_of_range&) {
    throw GraphError("synthetic descriptor '" + descriptor + "': number out of range");
  }
  throw GraphError("unknown synthetic kind: " + kind);
}

}  // namespace gnncg
