#include "symmine/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "symmine/error.hpp"

namespace symmine {

Graph Graph::from_edges(size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        LoadStats* stats) {
  LoadStats local;
  std::vector<std::pair<VertexId, VertexId>> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  const auto last = std::unique(directed.begin(), directed.end());
  local.duplicate_edges = (directed.end() - last) / 2;
  directed.erase(last, directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(directed.size());
  for (const auto& [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.adjacency_.push_back(v);
  }
  for (size_t i = 0; i < n; ++i) {
    g.offsets_[i + 1] += g.offsets_[i];
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[i + 1] - g.offsets_[i]);
  }
  g.original_ids_.resize(n);
  std::iota(g.original_ids_.begin(), g.original_ids_.end(), VertexId{0});
  if (stats) *stats = local;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph load_edge_list(std::istream& in, LoadStats* stats) {
  std::vector<std::pair<uint64_t, uint64_t>> raw;
  std::string line;
  size_t lineno = 0;
  const auto parse_id = [&](const std::string& tok) -> uint64_t {
    size_t used = 0;
    uint64_t value = 0;
    try {
      if (tok.front() == '-') throw std::invalid_argument("negative");
      value = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw InputError("edge list line " + std::to_string(lineno) + ": bad vertex ID \"" +
                       tok + "\"");
    }
    if (used != tok.size() || value > std::numeric_limits<VertexId>::max()) {
      throw InputError("edge list line " + std::to_string(lineno) + ": bad vertex ID \"" +
                       tok + "\"");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, rest;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> rest)) {
      throw InputError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    raw.emplace_back(parse_id(a), parse_id(b));
  }
  if (raw.empty()) throw InputError("empty edge list");

  // Compact source IDs to 0..n-1 in ascending numeric order.
  std::vector<uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto compact = [&ids](uint64_t id) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(compact(u), compact(v));

  Graph g = Graph::from_edges(ids.size(), edges, stats);
  std::vector<VertexId> originals(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) originals[i] = static_cast<VertexId>(ids[i]);
  g = Graph::with_original_ids(std::move(g), std::move(originals));
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return load_edge_list(in, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const size_t n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    if (nbrs.empty()) {
      out << u << ' ' << u << '\n';  // keeps the vertex on a reload
      continue;
    }
    for (VertexId v : nbrs) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  write_edge_list(g, out);
  if (!out) throw IoError("failed writing: " + path);
}

OrientResult orient_reindex(const Graph& g) {
  const size_t n = g.vertex_count();
  std::vector<VertexId> new_to_old(n);
  std::iota(new_to_old.begin(), new_to_old.end(), VertexId{0});
  std::stable_sort(new_to_old.begin(), new_to_old.end(), [&g](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<VertexId> old_to_new(n);
  for (size_t i = 0; i < n; ++i) old_to_new[new_to_old[i]] = static_cast<VertexId>(i);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
    }
  }
  Graph oriented = Graph::from_edges(n, edges);
  std::vector<VertexId> originals(n);
  const auto& source = g.original_ids();
  for (size_t i = 0; i < n; ++i) originals[i] = source[new_to_old[i]];
  oriented = Graph::with_original_ids(std::move(oriented), std::move(originals));
  return {std::move(oriented), std::move(new_to_old)};
}

}  // namespace symmine
