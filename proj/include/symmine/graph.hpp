#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace symmine {

using VertexId = uint32_t;

struct LoadStats {
  size_t duplicate_edges = 0;
  size_t self_loops = 0;
};

// Immutable undirected graph in CSR form. Neighbor lists are strictly
// ascending and symmetric; construction deduplicates and drops self-loops.
class Graph {
 public:
  Graph() = default;

  // Build from an edge list over vertices 0..n-1. Duplicates/self-loops are
  // dropped (counted in *stats when given).
  static Graph from_edges(size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                          LoadStats* stats = nullptr);

  static Graph with_original_ids(Graph g, std::vector<VertexId> originals) {
    g.original_ids_ = std::move(originals);
    return g;
  }

  size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  size_t max_degree() const { return max_degree_; }

  bool has_edge(VertexId u, VertexId v) const;

  // Source ID of each internal vertex (ascending after a load; permuted by
  // reindexing).
  const std::vector<VertexId>& original_ids() const { return original_ids_; }

  // Structural equality: vertex count + adjacency, ignoring original IDs.
  bool operator==(const Graph& other) const {
    return offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<size_t> offsets_;      // length n+1
  std::vector<VertexId> adjacency_;  // sorted slice per vertex
  std::vector<VertexId> original_ids_;
  size_t max_degree_ = 0;
};

// Edge-list text: one "u v" pair per line, '#' comments, blank lines
// ignored. Source IDs are compacted to 0..n-1 in ascending numeric order.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, LoadStats* stats = nullptr);

// Same format back out, one "u v" line per edge with u < v. Vertices with no
// edges are kept representable as "v v" lines (dropped again on load but
// they pin the vertex set).
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

struct OrientResult {
  Graph graph;
  std::vector<VertexId> new_to_old;
};

// Relabel so degree(i) >= degree(j) whenever i < j, ties broken by ascending
// old ID. High-degree vertices end up with small IDs, which is what makes
// the ID bounds on set operations cut deep into hot neighbor lists.
OrientResult orient_reindex(const Graph& g);

}  // namespace symmine
