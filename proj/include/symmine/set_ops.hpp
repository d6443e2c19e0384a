#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symmine/graph.hpp"

namespace symmine {

// Sorted-list kernels. Both are plain linear merges: on CPUs their regular
// access pattern beats binary-search variants on every input class we run.
// `bound` keeps only elements strictly below it and lets the scan stop at
// the cut instead of draining the inputs.

// out must hold at least a.size() elements; may alias a.data().
inline size_t intersect_into(std::span<const VertexId> a, std::span<const VertexId> b,
                             std::optional<VertexId> bound, VertexId* out) {
  const uint64_t limit = bound ? static_cast<uint64_t>(*bound)
                               : (static_cast<uint64_t>(1) << 32);
  size_t i = 0, j = 0, k = 0;
  while (i < a.size() && j < b.size()) {
    const VertexId x = a[i];
    if (static_cast<uint64_t>(x) >= limit) break;
    const VertexId y = b[j];
    if (x < y) {
      ++i;
    } else if (y < x) {
      ++j;
    } else {
      out[k++] = x;
      ++i;
      ++j;
    }
  }
  return k;
}

inline size_t difference_into(std::span<const VertexId> a, std::span<const VertexId> b,
                              std::optional<VertexId> bound, VertexId* out) {
  const uint64_t limit = bound ? static_cast<uint64_t>(*bound)
                               : (static_cast<uint64_t>(1) << 32);
  size_t i = 0, j = 0, k = 0;
  while (i < a.size()) {
    const VertexId x = a[i];
    if (static_cast<uint64_t>(x) >= limit) break;
    while (j < b.size() && b[j] < x) ++j;
    if (j < b.size() && b[j] == x) {
      ++i;
      continue;
    }
    out[k++] = x;
    ++i;
  }
  return k;
}

inline std::vector<VertexId> intersect(std::span<const VertexId> a,
                                       std::span<const VertexId> b,
                                       std::optional<VertexId> bound = {}) {
  std::vector<VertexId> out(a.size());
  out.resize(intersect_into(a, b, bound, out.data()));
  return out;
}

inline std::vector<VertexId> difference(std::span<const VertexId> a,
                                        std::span<const VertexId> b,
                                        std::optional<VertexId> bound = {}) {
  std::vector<VertexId> out(a.size());
  out.resize(difference_into(a, b, bound, out.data()));
  return out;
}

}  // namespace symmine
