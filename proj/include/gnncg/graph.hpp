// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnncg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One directed edge endpoint entry inside an adjacency row.
struct AdjEntry {
  VertexId vertex;  // the other endpoint (source in csr_dst rows, destination in csc_src rows)
  EdgeId edge;
};

/// Adjacency index: offsets[v]..offsets[v+1] delimit the row of vertex v.
/// Rows are sorted by edge id.
struct AdjIndex {
  std::vector<std::uint64_t> offsets;  // size V+1, nondecreasing, back() == E
  std::vector<AdjEntry> entries;       // size E
};

/// Immutable directed graph with dual indexing: by destination (in-edges)
/// and by source (out-edges). Edge ids are assigned by input order and
/// never renumbered; both indexes cover the identical edge set.
class Graph {
 public:
  Graph() = default;
  /// edges[i] = (src, dst) becomes edge id i.
  Graph(std::uint64_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges);

  std::uint64_t num_vertices() const { return num_vertices_; }
  std::uint64_t num_edges() const { return num_edges_; }

  /// In-edges grouped by destination vertex.
  const AdjIndex& csr_dst() const { return csr_dst_; }
  /// Out-edges grouped by source vertex.
  const AdjIndex& csc_src() const { return csc_src_; }

  VertexId edge_src(EdgeId e) const { return edge_src_[e]; }
  VertexId edge_dst(EdgeId e) const { return edge_dst_[e]; }

  std::uint64_t in_degree(VertexId v) const {
    return csr_dst_.offsets[v + 1] - csr_dst_.offsets[v];
  }
  std::uint64_t out_degree(VertexId v) const {
    return csc_src_.offsets[v + 1] - csc_src_.offsets[v];
  }

 private:
  std::uint64_t num_vertices_ = 0;
  std::uint64_t num_edges_ = 0;
  AdjIndex csr_dst_;
  AdjIndex csc_src_;
  std::vector<VertexId> edge_src_;
  std::vector<VertexId> edge_dst_;
};

struct DegreeStats {
  std::uint64_t max_in_degree = 0;
  double mean_in_degree = 0.0;  // num_edges / num_vertices, 0 for the empty graph
  std::uint64_t max_out_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Loads "src dst" pairs, one per line, 0-based decimal ids. Lines starting
/// with '#' are comments; the optional header "# vertices N" fixes the vertex
/// count (otherwise 1 + max id seen). Duplicate pairs are kept as distinct
/// edges. With expand_undirected, each line (u,v) yields u->v then v->u.
Graph load_edge_list(const std::string& path, bool expand_undirected = false);

/// MatrixMarket "coordinate pattern general" reader; 1-based indices are
/// converted to 0-based, the matrix is required to be square.
Graph load_matrix_market(const std::string& path);

enum class SyntheticKind { kErdosRenyi, kKRegularIn, kStar };

struct SyntheticParams {
  std::uint64_t num_vertices = 0;
  double edge_prob = 0.0;        // erdos_renyi
  std::uint64_t k = 0;           // k_regular_in
  std::uint64_t multiplicity = 1;  // star: parallel edges per spoke
  std::uint64_t seed = 0;
};

/// Deterministic synthetic graphs for a fixed seed. star(V) points every
/// other vertex at vertex 0 (maximally skewed in-degree).
Graph generate_synthetic(SyntheticKind kind, const SyntheticParams& params);

/// Parses "kind:param:param" descriptors, e.g. "erdos_renyi:100:0.05",
/// "k_regular_in:32:4", "star:1000" or "star:1000:2" (seed passed separately).
Graph generate_synthetic(const std::string& descriptor, std::uint64_t seed);

}  // namespace gnncg
