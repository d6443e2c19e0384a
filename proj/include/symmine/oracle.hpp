#pragma once

#include <map>

#include "symmine/graph.hpp"
#include "symmine/restrictions.hpp"

namespace symmine::oracle {

// Ground truth by exhaustive enumeration: vertex subsets of size p.n, label
// permutations within each subset. Deliberately shares nothing with the
// engine's set kernels. Size guards: p.n <= 6, g.n <= 60.

inline constexpr int kMaxOraclePattern = 6;
inline constexpr size_t kMaxOracleGraph = 60;

struct OracleReport {
  uint64_t induced = 0;           // instances (subsets isomorphic to p)
  uint64_t mappings = 0;          // injective label maps realizing p
  uint64_t mappings_full = 0;     // ... also satisfying every relation (if asked)
  uint64_t mappings_minimized = 0;  // ... satisfying only the per-level checks
  // Surviving mapping count per instance, aligned across the three filters.
  std::vector<uint32_t> per_instance_mappings;
  std::vector<uint32_t> per_instance_full;
  std::vector<uint32_t> per_instance_minimized;
};

// One pass over all subsets. `order` / `restrictions` are optional filters;
// when null the corresponding counts stay zero.
OracleReport scan(const Graph& g, const Pattern& p, const Schedule& s,
                  const PartialOrder* order = nullptr,
                  const RestrictionMap* restrictions = nullptr);

uint64_t induced_count(const Graph& g, const Pattern& p);

// mappings with no filter == induced * |Aut|
uint64_t mapping_count(const Graph& g, const Pattern& p, const Schedule& s);

// Histogram of induced connected k-subgraphs by canonical key, one subset
// sweep for all patterns at once.
std::map<uint64_t, uint64_t> induced_counts_by_key(const Graph& g, int k);

}  // namespace symmine::oracle
