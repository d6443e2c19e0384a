#pragma once

#include <optional>

#include "symmine/cost_model.hpp"
#include "symmine/graph.hpp"
#include "symmine/plan.hpp"

namespace symmine {

struct CountResult {
  uint64_t count = 0;
  std::vector<uint64_t> per_worker;
  double wall_ms = 0.0;
};

// Run the plan's nested loops over g and count completed embeddings. With
// restrictions on this is the number of induced instances; with them off it
// is that number times the automorphism group size. Level-0 vertices are
// split into static blocks, one per worker; each worker owns its scratch
// buffers and counter, so the total is identical for any worker count.
// Throws CountOverflowError instead of wrapping past 2^64-1.
CountResult count_instances(const Graph& g, const Plan& plan, unsigned workers = 1);

using Embedding = std::vector<VertexId>;

// Completed embeddings as per-level vertex tuples, in ascending-then-
// lexicographic order, truncated at limit.
std::vector<Embedding> enumerate_instances(const Graph& g, const Plan& plan,
                                           std::optional<uint64_t> limit = {});

struct MotifEntry {
  Pattern pattern;
  uint64_t key = 0;   // canonical adjacency key
  uint64_t count = 0;
};

// Induced count of every connected k-vertex pattern (3 <= k <= 5), each
// mined with its own selected schedule and restrictions. Sorted by key.
std::vector<MotifEntry> motif_counts(const Graph& g, int k, const CostParams& params,
                                     unsigned workers = 1);

namespace detail {
// Sum that throws CountOverflowError instead of wrapping.
uint64_t checked_add(uint64_t a, uint64_t b);
}  // namespace detail

}  // namespace symmine
