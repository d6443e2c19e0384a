#include "symmine/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symmine/error.hpp"

namespace symmine {

namespace {

bool connected(int n, const std::array<uint8_t, kMaxPatternVertices>& adj) {
  uint8_t seen = 1;  // start from label 0
  uint8_t frontier = 1;
  while (frontier != 0) {
    uint8_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier & (1u << v)) next |= adj[v];
    }
    frontier = next & static_cast<uint8_t>(~seen);
    seen |= next;
  }
  return seen == static_cast<uint8_t>((1u << n) - 1);
}

}  // namespace

Pattern::Pattern(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 2 || n > kMaxPatternVertices) {
    throw InputError("pattern vertex count must be in 2..8, got " + std::to_string(n));
  }
  for (auto& [a, b] : edges) {
    if (a == b) throw InputError("pattern self-loop at label " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("pattern label out of range 0.." + std::to_string(n - 1));
    }
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) {
      throw InputError("duplicate pattern edge " + std::to_string(a) + " " + std::to_string(b));
    }
    adj_[a] |= static_cast<uint8_t>(1u << b);
    adj_[b] |= static_cast<uint8_t>(1u << a);
  }
  if (!connected(n_, adj_)) throw InputError("pattern is disconnected");
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

int Pattern::pair_index(int i, int j, int n) {
  // (0,1),(0,2),...,(0,n-1),(1,2),... in order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

uint64_t Pattern::adjacency_key() const {
  uint64_t key = 0;
  for (const auto& [i, j] : edges_) {
    key |= uint64_t{1} << pair_index(i, j, n_);
  }
  return key;
}

namespace {

std::vector<std::string> significant_tokens(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::vector<std::string> tokens;
  std::istringstream fields(line);
  std::string tok;
  while (fields >> tok) tokens.push_back(tok);
  return tokens;
}

bool parse_ll(const std::string& tok, long long& out) {
  size_t used = 0;
  try {
    out = std::stoll(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = significant_tokens(line);
    if (tokens.empty()) continue;
    const std::string where = "pattern line " + std::to_string(lineno);
    if (n < 0) {
      long long head;
      if (tokens.size() != 1 || !parse_ll(tokens[0], head)) {
        throw InputError(where + ": expected vertex count");
      }
      if (head < 2 || head > kMaxPatternVertices) {
        throw InputError(where + ": vertex count must be in 2..8");
      }
      n = static_cast<int>(head);
      continue;
    }
    long long a, b;
    if (tokens.size() != 2 || !parse_ll(tokens[0], a) || !parse_ll(tokens[1], b)) {
      throw InputError(where + ": expected \"i j\"");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError(where + ": label out of range");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw InputError("empty pattern text");
  return Pattern(n, std::move(edges));
}

namespace {

Pattern make(int n, std::initializer_list<std::pair<int, int>> edges) {
  return Pattern(n, std::vector<std::pair<int, int>>(edges));
}

Pattern clique(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Pattern(k, std::move(edges));
}

Pattern clique_minus(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  return Pattern(k, std::move(edges));
}

Pattern path(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Pattern(k, std::move(edges));
}

Pattern star(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
  return Pattern(k, std::move(edges));
}

Pattern cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k - 1);
  return Pattern(k, std::move(edges));
}

}  // namespace

Pattern named_pattern(std::string_view name, int k) {
  const bool sized = name == "clique" || name == "clique_minus" || name == "path" || name == "star";
  if (sized) {
    if (k < 2 || k > kMaxPatternVertices) {
      throw InputError(std::string(name) + " needs a size in 2..8");
    }
    if (name == "clique") return clique(k);
    if (name == "clique_minus") return clique_minus(k);
    if (name == "path") return path(k);
    return star(k);
  }
  if (k != 0) throw InputError("pattern \"" + std::string(name) + "\" does not take a size");
  if (name == "triangle") return clique(3);
  if (name == "rectangle") return make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  if (name == "pentagon") return cycle(5);
  if (name == "tailed_triangle") return make(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "hourglass") return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  if (name == "house") return make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}});
  throw InputError("unknown pattern name \"" + std::string(name) + "\"");
}

AutomorphismGroup automorphisms(const Pattern& p) {
  const int n = p.size();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  AutomorphismGroup group;
  do {
    bool ok = true;
    for (const auto& [i, j] : p.edges()) {
      if (!p.has_edge(perm[i], perm[j])) {
        ok = false;
        break;
      }
    }
    // Bijections preserve edge counts, so edges -> edges already implies
    // non-edges -> non-edges.
    if (ok) group.members.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

uint64_t canonical_key(const Pattern& p) {
  const int n = p.size();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t key = 0;
    for (const auto& [i, j] : p.edges()) {
      int a = perm[i], b = perm[j];
      if (a > b) std::swap(a, b);
      key |= uint64_t{1} << Pattern::pair_index(a, b, n);
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Pattern pattern_from_key(int n, uint64_t key) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (key & (uint64_t{1} << Pattern::pair_index(i, j, n))) edges.emplace_back(i, j);
    }
  }
  return Pattern(n, std::move(edges));
}

std::vector<Pattern> connected_patterns(int k) {
  if (k < 2 || k > kMaxPatternVertices) throw InputError("pattern size must be in 2..8");
  const int pairs = k * (k - 1) / 2;
  std::vector<uint64_t> keys;
  for (uint64_t mask = 1; mask < (uint64_t{1} << pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (mask & (uint64_t{1} << Pattern::pair_index(i, j, k))) edges.emplace_back(i, j);
    try {
      Pattern p(k, std::move(edges));
      uint64_t key = canonical_key(p);
      if (key == mask) keys.push_back(key);  // keep only the canonical labeling
    } catch (const InputError&) {
      continue;  // disconnected
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Pattern> out;
  out.reserve(keys.size());
  for (uint64_t key : keys) out.push_back(pattern_from_key(k, key));
  return out;
}

std::string adjacency_bits(const Pattern& p) {
  const int pairs = p.size() * (p.size() - 1) / 2;
  const uint64_t key = p.adjacency_key();
  std::string bits(pairs, '0');
  for (int b = 0; b < pairs; ++b) {
    if (key & (uint64_t{1} << b)) bits[b] = '1';
  }
  return bits;
}

std::string pattern_display_name(const Pattern& p) {
  struct Named {
    const char* name;
    Pattern pattern;
  };
  const int n = p.size();
  std::vector<Named> known;
  switch (n) {
    case 2:
      known.push_back({"edge", clique(2)});
      break;
    case 3:
      known.push_back({"wedge", path(3)});
      known.push_back({"triangle", clique(3)});
      break;
    case 4:
      known.push_back({"path4", path(4)});
      known.push_back({"star4", star(4)});
      known.push_back({"tailed_triangle", named_pattern("tailed_triangle")});
      known.push_back({"rectangle", named_pattern("rectangle")});
      known.push_back({"diamond", clique_minus(4)});
      known.push_back({"clique4", clique(4)});
      break;
    case 5:
      known.push_back({"path5", path(5)});
      known.push_back({"star5", star(5)});
      known.push_back({"pentagon", named_pattern("pentagon")});
      known.push_back({"house", named_pattern("house")});
      known.push_back({"hourglass", named_pattern("hourglass")});
      known.push_back({"clique5_minus", clique_minus(5)});
      known.push_back({"clique5", clique(5)});
      break;
    default:
      break;
  }
  const uint64_t key = canonical_key(p);
  for (const auto& entry : known) {
    if (canonical_key(entry.pattern) == key) return entry.name;
  }
  return "";
}

}  // namespace symmine
