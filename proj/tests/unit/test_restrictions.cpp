#include <numeric>
#include <set>

#include "doctest.h"
#include "symmine/error.hpp"
#include "symmine/restrictions.hpp"

using namespace symmine;

namespace {

std::set<std::pair<int, int>> relation_set(const PartialOrder& order) {
  return {order.relations.begin(), order.relations.end()};
}

}  // namespace

TEST_CASE("rectangle restrictions golden case") {
  const Pattern rect = named_pattern("rectangle");
  const Schedule s{0, 1, 2, 3};
  const PartialOrder order = generate_restrictions(rect, s, automorphisms(rect));
  CHECK(relation_set(order) ==
        std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(order.orbit_sizes == std::vector<int>{4, 2, 1, 1});
  CHECK(minimize_restrictions(s, order) == RestrictionMap{kNoParent, 0, 1, 0});
}

TEST_CASE("triangle restrictions") {
  const Pattern tri = named_pattern("triangle");
  const Schedule s{0, 1, 2};
  const PartialOrder order = generate_restrictions(tri, s, automorphisms(tri));
  CHECK(relation_set(order) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(minimize_restrictions(s, order) == RestrictionMap{kNoParent, 0, 1});
}

TEST_CASE("tailed triangle restricts only the symmetric pair") {
  const Pattern tailed = named_pattern("tailed_triangle");
  const Schedule s{0, 1, 2, 3};
  const PartialOrder order = generate_restrictions(tailed, s, automorphisms(tailed));
  CHECK(relation_set(order) == std::set<std::pair<int, int>>{{2, 3}});
  CHECK(minimize_restrictions(s, order) == RestrictionMap{kNoParent, kNoParent, kNoParent, 2});
}

TEST_CASE("restrictions reject an invalid schedule") {
  const Pattern path4 = named_pattern("path", 4);
  CHECK_THROWS_AS(generate_restrictions(path4, {0, 3, 1, 2}, automorphisms(path4)),
                  InputError);
}

TEST_CASE("relations point forward in the schedule and orbits multiply to the group size") {
  for (int k = 2; k <= 5; ++k) {
    for (const Pattern& p : connected_patterns(k)) {
      const AutomorphismGroup aut = automorphisms(p);
      for (const Schedule& s : distinct_schedules(p, aut)) {
        std::vector<int> pos(s.size());
        for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
        const PartialOrder order = generate_restrictions(p, s, aut);
        for (const auto& [a, b] : order.relations) {
          CHECK(pos[a] < pos[b]);  // also implies the relation closure is acyclic
        }
        const uint64_t product =
            std::accumulate(order.orbit_sizes.begin(), order.orbit_sizes.end(),
                            uint64_t{1}, std::multiplies<>());
        CHECK(product == aut.multiplicity());

        const RestrictionMap parents = minimize_restrictions(s, order);
        CHECK(parents[0] == kNoParent);
        for (size_t level = 0; level < parents.size(); ++level) {
          int latest = kNoParent;
          for (const auto& [a, b] : order.relations) {
            if (pos[b] == static_cast<int>(level)) latest = std::max(latest, pos[a]);
          }
          CHECK(parents[level] == latest);
        }
      }
    }
  }
}
