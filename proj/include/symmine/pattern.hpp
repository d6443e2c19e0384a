#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symmine {

inline constexpr int kMaxPatternVertices = 8;

// A small connected undirected pattern on labels 0..n-1. Non-edges are
// required absences when matching (induced semantics), so the edge set fully
// determines both the intersection and the difference structure of a plan.
class Pattern {
 public:
  // Validates: 2 <= n <= 8, labels in range, no self-loops, no duplicate
  // edges, connected. Throws InputError otherwise.
  Pattern(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int a, int b) const { return (adj_[a] >> b) & 1u; }
  // Neighbor labels of v as a bitmask.
  uint8_t neighbor_mask(int v) const { return adj_[v]; }

  // Sorted list of (i, j) pairs with i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Upper-triangle adjacency bitstring: bit pair_index(i,j) is set iff edge.
  uint64_t adjacency_key() const;

  bool operator==(const Pattern& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  static int pair_index(int i, int j, int n);

 private:
  int n_;
  std::array<uint8_t, kMaxPatternVertices> adj_{};
  std::vector<std::pair<int, int>> edges_;
};

using Permutation = std::vector<int>;

// All adjacency-preserving relabelings, identity first then lexicographic by
// image array. The group size is the pattern's multiplicity: the number of
// times an unrestricted schedule discovers each instance.
struct AutomorphismGroup {
  std::vector<Permutation> members;

  size_t multiplicity() const { return members.size(); }
};

// Pattern text: first significant line is the vertex count, each following
// line one edge "i j". '#' starts a comment. Duplicate edges are rejected.
Pattern parse_pattern(std::string_view text);

// Builders for the common workload shapes. Names taking a size: clique,
// clique_minus, path, star (k in 2..8). Fixed shapes: triangle, rectangle,
// pentagon, tailed_triangle, hourglass, house.
Pattern named_pattern(std::string_view name, int k = 0);

// Brute force over all n! label permutations; n <= 8 keeps this instant.
AutomorphismGroup automorphisms(const Pattern& p);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& a);

// Smallest adjacency_key over all relabelings of p.
uint64_t canonical_key(const Pattern& p);

// Build the pattern whose adjacency_key equals `key` (labels as encoded).
Pattern pattern_from_key(int n, uint64_t key);

// Canonical representatives of every connected pattern on k vertices,
// sorted by canonical key.
std::vector<Pattern> connected_patterns(int k);

// "111"-style rendering of adjacency_key in pair-index order.
std::string adjacency_bits(const Pattern& p);

// Well-known display name ("triangle", "wedge", ...) or "" if unnamed.
std::string pattern_display_name(const Pattern& p);

}  // namespace symmine
