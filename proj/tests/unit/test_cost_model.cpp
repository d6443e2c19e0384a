#include <cmath>

#include "doctest.h"
#include "symmine/cost_model.hpp"

using namespace symmine;

namespace {

PartialOrder restrictions_for(const Pattern& p, const Schedule& s) {
  return generate_restrictions(p, s, automorphisms(p));
}

}  // namespace

TEST_CASE("rectangle probability chain golden case") {
  const Pattern rect = named_pattern("rectangle");
  const Schedule s{0, 1, 2, 3};
  const auto z_cum = restriction_probabilities(s, restrictions_for(rect, s));
  REQUIRE(z_cum.size() == 4);
  CHECK(z_cum[0] == std::pair<int, double>{4, 0.25});
  CHECK(z_cum[1] == std::pair<int, double>{2, 0.125});
  CHECK(z_cum[2] == std::pair<int, double>{1, 0.125});
  CHECK(z_cum[3] == std::pair<int, double>{1, 0.125});
}

TEST_CASE("triangle and tailed triangle probability chains") {
  const Pattern tri = named_pattern("triangle");
  const auto tri_chain = restriction_probabilities({0, 1, 2}, restrictions_for(tri, {0, 1, 2}));
  CHECK(tri_chain[0].first == 3);
  CHECK(tri_chain[1].first == 2);
  CHECK(tri_chain[2].first == 1);
  CHECK(tri_chain[2].second == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const Pattern tailed = named_pattern("tailed_triangle");
  const auto chain = restriction_probabilities({0, 1, 2, 3}, restrictions_for(tailed, {0, 1, 2, 3}));
  CHECK(chain[0].first == 1);
  CHECK(chain[1].first == 1);
  CHECK(chain[2].first == 2);
  CHECK(chain[3].first == 1);
  CHECK(chain[3].second == 0.5);
}

TEST_CASE("terminal probability is exactly the reciprocal multiplicity") {
  for (int k = 2; k <= 5; ++k) {
    for (const Pattern& p : connected_patterns(k)) {
      const AutomorphismGroup aut = automorphisms(p);
      for (const Schedule& s : distinct_schedules(p, aut)) {
        const auto chain = restriction_probabilities(s, generate_restrictions(p, s, aut));
        uint64_t z_product = 1;
        double last_cum = 1.0;
        for (const auto& [z, cum] : chain) {
          CHECK(z >= 1);
          CHECK(cum <= last_cum);  // non-increasing
          z_product *= z;
          last_cum = cum;
        }
        CHECK(z_product == aut.multiplicity());  // exact, in integers
        CHECK(std::abs(last_cum - 1.0 / static_cast<double>(aut.multiplicity())) < 1e-12);
      }
    }
  }
}

TEST_CASE("triangle level sizes follow the density formula") {
  const Pattern tri = named_pattern("triangle");
  const CostParams params;
  const Schedule s{0, 1, 2};
  const ScheduleCost cost = estimate_cost(tri, s, restrictions_for(tri, s), params);
  const double p = 5.0 / 999.0;
  REQUIRE(cost.per_level.size() == 3);
  CHECK(cost.per_level[0].size == 1000.0);
  CHECK(cost.per_level[1].size == doctest::Approx(1000.0 * p).epsilon(1e-12));
  CHECK(cost.per_level[2].size == doctest::Approx(1000.0 * p * p).epsilon(1e-12));
  CHECK(cost.per_level[1].k1 == 0);
  CHECK(cost.per_level[2].k1 == 1);
  CHECK(cost.total > 0.0);
  CHECK(std::isfinite(cost.total));
}

TEST_CASE("diff-heavy levels account for the non-edge factor") {
  const Pattern rect = named_pattern("rectangle");
  const CostParams params;
  const Schedule s{0, 1, 2, 3};
  const ScheduleCost cost = estimate_cost(rect, s, restrictions_for(rect, s), params);
  const double p = params.edge_prob();
  CHECK(cost.per_level[2].k2 == 1);
  CHECK(cost.per_level[2].size == doctest::Approx(1000.0 * p * (1.0 - p)).epsilon(1e-12));
  CHECK(cost.per_level[3].k1 == 1);
  CHECK(cost.per_level[3].k2 == 1);
}

TEST_CASE("the selected tailed-triangle schedule finds the triangle first") {
  const Pattern tailed = named_pattern("tailed_triangle");
  const CostParams params;

  const auto choices = analyze_schedules(tailed, params);
  double tail_first_cost = -1.0, triangle_first_cost = -1.0;
  for (const auto& c : choices) {
    if (c.schedule == Schedule{0, 1, 2, 3}) tail_first_cost = c.cost.total;
    if (c.schedule[0] != 0 && c.schedule[1] != 0 && c.schedule[2] != 0) {
      triangle_first_cost = c.cost.total;
    }
  }
  REQUIRE(tail_first_cost > 0.0);
  REQUIRE(triangle_first_cost > 0.0);
  CHECK(triangle_first_cost < tail_first_cost);

  const SelectedSchedule sel = select_schedule(tailed, params);
  CHECK(sel.choice.schedule[3] == 0);  // the tail is discovered last
}

TEST_CASE("clique has a single candidate and stable selection") {
  const CostParams params;
  const Pattern k4 = named_pattern("clique", 4);
  const auto choices = analyze_schedules(k4, params);
  REQUIRE(choices.size() == 1);
  CHECK(select_schedule(k4, params).index == 0);
  CHECK(select_schedule(k4, {2000.0, 5.0}).index == 0);

  const Pattern rect = named_pattern("rectangle");
  const SelectedSchedule a = select_schedule(rect, params);
  const SelectedSchedule b = select_schedule(rect, params);
  CHECK(a.choice.schedule == b.choice.schedule);
  CHECK(a.index == b.index);
}

TEST_CASE("a larger model graph strictly raises every schedule cost") {
  for (const char* name : {"triangle", "rectangle", "tailed_triangle", "house", "pentagon"}) {
    const Pattern p = named_pattern(name);
    const auto small = analyze_schedules(p, {1000.0, 5.0});
    const auto large = analyze_schedules(p, {2000.0, 5.0});
    REQUIRE(small.size() == large.size());
    for (size_t i = 0; i < small.size(); ++i) {
      CHECK(large[i].cost.total > small[i].cost.total);
    }
  }
}
