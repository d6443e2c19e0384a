#include <algorithm>
#include <set>

#include "doctest.h"
#include "symmine/schedule.hpp"

using namespace symmine;

namespace {

std::set<Schedule> as_set(const ScheduleList& list) {
  return {list.begin(), list.end()};
}

std::vector<Pattern> test_patterns(int max_n) {
  std::vector<Pattern> out;
  for (int k = 2; k <= max_n; ++k) {
    for (Pattern& p : connected_patterns(k)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("exhaustive generator golden cases") {
  CHECK(valid_schedules_exhaustive(named_pattern("clique", 4)).size() == 24);
  CHECK(valid_schedules_exhaustive(named_pattern("triangle")).size() == 6);
  const ScheduleList path3 = valid_schedules_exhaustive(named_pattern("path", 3));
  CHECK(path3 == ScheduleList{{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}});
}

TEST_CASE("recursive generator matches the exhaustive filter") {
  CHECK(valid_schedules_recursive(named_pattern("path", 4)).size() == 8);
  CHECK(valid_schedules_recursive(named_pattern("clique", 5)).size() == 120);
  for (const Pattern& p : test_patterns(5)) {
    CHECK(as_set(valid_schedules_recursive(p)) == as_set(valid_schedules_exhaustive(p)));
  }
}

TEST_CASE("every generated schedule is valid") {
  for (const Pattern& p : test_patterns(5)) {
    const AutomorphismGroup aut = automorphisms(p);
    for (const Schedule& s : valid_schedules_recursive(p)) CHECK(schedule_valid(p, s));
    for (const Schedule& s : distinct_schedules(p, aut)) CHECK(schedule_valid(p, s));
  }
}

TEST_CASE("distinct schedule golden cases") {
  for (int k = 2; k <= 6; ++k) {
    const Pattern p = named_pattern("clique", k);
    CHECK(distinct_schedules(p, automorphisms(p)).size() == 1);
  }
  const Pattern path3 = named_pattern("path", 3);
  CHECK(distinct_schedules(path3, automorphisms(path3)).size() == 2);

  const Pattern tailed = named_pattern("tailed_triangle");
  const AutomorphismGroup aut = automorphisms(tailed);
  const ScheduleList distinct = distinct_schedules(tailed, aut);
  CHECK(distinct.size() == valid_schedules_recursive(tailed).size() / 2);
  // the two orderings of the symmetric pair collapse to one representative
  CHECK(schedules_equivalent(aut, {0, 1, 2, 3}, {0, 1, 3, 2}));
  const bool has_0123 = std::count(distinct.begin(), distinct.end(), Schedule{0, 1, 2, 3}) == 1;
  const bool has_0132 = std::count(distinct.begin(), distinct.end(), Schedule{0, 1, 3, 2}) == 1;
  CHECK(has_0123 != has_0132);
}

TEST_CASE("schedule equivalence golden cases") {
  const Pattern tri = named_pattern("triangle");
  CHECK(schedules_equivalent(automorphisms(tri), {0, 1, 2}, {2, 0, 1}));
  const Pattern tailed = named_pattern("tailed_triangle");
  const AutomorphismGroup aut = automorphisms(tailed);
  CHECK_FALSE(schedules_equivalent(aut, {0, 1, 2, 3}, {2, 3, 1, 0}));
}

TEST_CASE("orbit identity, completeness, and internal distinctness") {
  for (const Pattern& p : test_patterns(5)) {
    const AutomorphismGroup aut = automorphisms(p);
    const ScheduleList valid = valid_schedules_recursive(p);
    const ScheduleList distinct = distinct_schedules(p, aut);
    CHECK(distinct.size() * aut.multiplicity() == valid.size());
    for (const Schedule& s : valid) {
      size_t matches = 0;
      for (const Schedule& d : distinct) {
        if (schedules_equivalent(aut, s, d)) ++matches;
      }
      CHECK(matches == 1);
    }
    for (size_t i = 0; i < distinct.size(); ++i) {
      for (size_t j = i + 1; j < distinct.size(); ++j) {
        CHECK_FALSE(schedules_equivalent(aut, distinct[i], distinct[j]));
      }
    }
  }
}
