#include "symmine/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "symmine/error.hpp"

namespace symmine::oracle {

namespace {

void check_guards(const Graph& g, const Pattern& p) {
  if (p.size() > kMaxOraclePattern) {
    throw InputError("oracle pattern guard: at most 6 vertices");
  }
  if (g.vertex_count() > kMaxOracleGraph) {
    throw InputError("oracle graph guard: at most 60 vertices");
  }
}

// Dense adjacency rows; one word per vertex is enough under the size guard.
std::vector<uint64_t> adjacency_rows(const Graph& g) {
  std::vector<uint64_t> rows(g.vertex_count(), 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) rows[u] |= uint64_t{1} << v;
  }
  return rows;
}

// Visit every ascending k-subset of 0..n-1.
template <typename Visit>
void for_each_subset(size_t n, int k, Visit&& visit) {
  if (static_cast<size_t>(k) > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(n) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Pair-indexed bitmask of the subgraph induced by `idx`.
uint64_t induced_mask(const std::vector<uint64_t>& rows, const std::vector<int>& idx, int k) {
  uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (rows[idx[i]] & (uint64_t{1} << idx[j])) {
        mask |= uint64_t{1} << Pattern::pair_index(i, j, k);
      }
    }
  }
  return mask;
}

// mask -> minimum relabeled mask, for every k-vertex graph at once. Only
// feasible for k <= 5 (2^10 masks x 120 relabelings).
std::vector<uint64_t> canonical_table(int k) {
  const int pairs = k * (k - 1) / 2;
  std::vector<std::vector<int>> pair_maps;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> pm(pairs);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        pm[Pattern::pair_index(i, j, k)] = Pattern::pair_index(a, b, k);
      }
    }
    pair_maps.push_back(std::move(pm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<uint64_t> table(uint64_t{1} << pairs);
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    uint64_t best = ~uint64_t{0};
    for (const auto& pm : pair_maps) {
      uint64_t image = 0;
      uint64_t bits = mask;
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        image |= uint64_t{1} << pm[b];
      }
      best = std::min(best, image);
    }
    table[mask] = best;
  }
  return table;
}

}  // namespace

OracleReport scan(const Graph& g, const Pattern& p, const Schedule& s,
                  const PartialOrder* order, const RestrictionMap* restrictions) {
  check_guards(g, p);
  const int k = p.size();
  if (restrictions && static_cast<int>(s.size()) != k) {
    throw InputError("oracle needs the schedule to apply a restriction map");
  }
  const auto rows = adjacency_rows(g);

  // All label -> slot assignments, enumerated once.
  std::vector<std::vector<int>> sigmas;
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    sigmas.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  OracleReport report;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& idx) {
    const uint64_t mask = induced_mask(rows, idx, k);
    if (std::popcount(mask) != p.edge_count()) return;
    uint32_t matches = 0, full = 0, minimized = 0;
    for (const auto& sg : sigmas) {
      bool match = true;
      for (const auto& [a, b] : p.edges()) {
        int x = sg[a], y = sg[b];
        if (x > y) std::swap(x, y);
        if (!(mask & (uint64_t{1} << Pattern::pair_index(x, y, k)))) {
          match = false;
          break;
        }
      }
      if (!match) continue;  // equal edge counts make edges->edges sufficient
      ++matches;
      if (order) {
        // Subset slots are ascending, so slot order is ID order.
        bool ok = true;
        for (const auto& [a, b] : order->relations) {
          if (sg[a] < sg[b]) {
            ok = false;
            break;
          }
        }
        if (ok) ++full;
      }
      if (restrictions) {
        bool ok = true;
        for (size_t level = 0; level < restrictions->size(); ++level) {
          const int parent = (*restrictions)[level];
          if (parent != kNoParent && sg[s[level]] > sg[s[parent]]) {
            ok = false;
            break;
          }
        }
        if (ok) ++minimized;
      }
    }
    if (matches == 0) return;
    ++report.induced;
    report.mappings += matches;
    report.mappings_full += full;
    report.mappings_minimized += minimized;
    report.per_instance_mappings.push_back(matches);
    report.per_instance_full.push_back(full);
    report.per_instance_minimized.push_back(minimized);
  });
  return report;
}

uint64_t induced_count(const Graph& g, const Pattern& p) {
  check_guards(g, p);
  const int k = p.size();
  if (k <= 5) {
    static thread_local std::array<std::vector<uint64_t>, 6> tables;
    auto& table = tables[k];
    if (table.empty()) table = canonical_table(k);
    const uint64_t want = canonical_key(p);
    const auto rows = adjacency_rows(g);
    uint64_t count = 0;
    for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& idx) {
      if (table[induced_mask(rows, idx, k)] == want) ++count;
    });
    return count;
  }
  return scan(g, p, {}).induced;
}

uint64_t mapping_count(const Graph& g, const Pattern& p, const Schedule& s) {
  return scan(g, p, s).mappings;
}

std::map<uint64_t, uint64_t> induced_counts_by_key(const Graph& g, int k) {
  if (k < 2 || k > 5) throw InputError("per-class oracle counts support sizes 2..5");
  if (g.vertex_count() > kMaxOracleGraph) {
    throw InputError("oracle graph guard: at most 60 vertices");
  }
  static thread_local std::array<std::vector<uint64_t>, 6> tables;
  auto& table = tables[k];
  if (table.empty()) table = canonical_table(k);
  const auto rows = adjacency_rows(g);
  std::map<uint64_t, uint64_t> counts;
  for (const Pattern& p : connected_patterns(k)) counts[canonical_key(p)] = 0;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& idx) {
    const uint64_t key = table[induced_mask(rows, idx, k)];
    // Disconnected subsets have no entry in the universe and are skipped.
    if (auto it = counts.find(key); it != counts.end()) ++it->second;
  });
  return counts;
}

}  // namespace symmine::oracle
