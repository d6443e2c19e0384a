#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symmine/graph.hpp"

namespace symmine::testutil {

inline Graph complete_graph(size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<VertexId>(n - 1));
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(size_t a, size_t b) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < a; ++i)
    for (VertexId j = 0; j < b; ++j) edges.emplace_back(i, static_cast<VertexId>(a + j));
  return Graph::from_edges(a + b, edges);
}

inline Graph star_graph(size_t leaves) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph petersen_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spoke
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

// Uniform random graph; raw mt19937 draws keep it identical across
// platforms.
inline Graph er_graph(size_t n, double p, uint32_t seed) {
  std::mt19937 gen(seed);
  const auto threshold = static_cast<uint32_t>(p * 4294967296.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (gen() < threshold) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

// The shared random-graph corpus: two sizes, three densities, several seeds.
inline std::vector<Graph> er_corpus() {
  std::vector<Graph> graphs;
  for (size_t n : {15, 30}) {
    for (double p : {0.1, 0.3, 0.6}) {
      for (uint32_t seed : {1u, 2u, 3u}) {
        graphs.push_back(er_graph(n, p, seed * 1000 + static_cast<uint32_t>(n)));
      }
    }
  }
  graphs.push_back(er_graph(15, 0.3, 4015));
  graphs.push_back(er_graph(30, 0.3, 4030));
  return graphs;
}

}  // namespace symmine::testutil
