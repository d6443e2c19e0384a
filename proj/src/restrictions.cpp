#include "symmine/restrictions.hpp"

#include <algorithm>
#include <bit>

#include "symmine/error.hpp"

namespace symmine {

PartialOrder generate_restrictions(const Pattern& p, const Schedule& s,
                                   const AutomorphismGroup& aut) {
  if (!schedule_valid(p, s)) throw InputError("schedule is not valid for the pattern");
  std::vector<int> pos(p.size());
  for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);

  PartialOrder result;
  std::vector<Permutation> current = aut.members;
  for (const int v : s) {
    std::vector<Permutation> stabilized;
    stabilized.reserve(current.size());
    uint8_t images = 1u << v;
    for (const Permutation& x : current) {
      if (x[v] == v) {
        stabilized.push_back(x);
      } else {
        images |= static_cast<uint8_t>(1u << x[v]);
        const std::pair<int, int> rel{v, x[v]};
        if (std::find(result.relations.begin(), result.relations.end(), rel) ==
            result.relations.end()) {
          result.relations.push_back(rel);
        }
      }
    }
    result.orbit_sizes.push_back(std::popcount(images));
    current = std::move(stabilized);
  }
  std::sort(result.relations.begin(), result.relations.end(),
            [&pos](const auto& a, const auto& b) {
              return std::pair(pos[a.first], pos[a.second]) <
                     std::pair(pos[b.first], pos[b.second]);
            });
  return result;
}

RestrictionMap minimize_restrictions(const Schedule& s, const PartialOrder& order) {
  std::vector<int> pos(s.size());
  for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  RestrictionMap parents(s.size(), kNoParent);
  for (const auto& [a, b] : order.relations) {
    // relation (a, b): the value at b's level is bounded above by a's; keep
    // the latest such a per level.
    parents[pos[b]] = std::max(parents[pos[b]], pos[a]);
  }
  return parents;
}

}  // namespace symmine
