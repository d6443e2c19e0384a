#pragma once

#include "symmine/restrictions.hpp"

namespace symmine {

// Probabilistic model of a uniform random graph: n_model vertices, each edge
// present independently with probability d_model / (n_model - 1), i.e. an
// expected average degree of d_model.
struct CostParams {
  double n_model = 1000.0;
  double d_model = 5.0;

  double edge_prob() const { return d_model / (n_model - 1.0); }
};

struct LevelEstimate {
  int k1 = 0;           // intersection count feeding this level's set, minus one source
  int k2 = 0;           // difference count
  double size = 0.0;    // expected candidate-set size: n * p^(k1+1) * (1-p)^k2
  int z = 1;            // vertices forced at or below this level's value, incl. itself
  double cum_prob = 1.0;  // probability all ID checks through this level pass
};

struct ScheduleCost {
  double total = 0.0;
  std::vector<LevelEstimate> per_level;
};

// (z, cum_prob) per level. z comes from the transitive closure of the full
// relation set; the cumulative product of 1/z ends at 1/|aut| on the last
// level.
std::vector<std::pair<int, double>> restriction_probabilities(
    const Schedule& s, const PartialOrder& order);

// Expected iteration counts per loop level times a linear-scan work proxy
// for building the next level's set, summed over levels.
ScheduleCost estimate_cost(const Pattern& p, const Schedule& s,
                           const PartialOrder& order, const CostParams& params);

// One fully analyzed distinct schedule.
struct ScheduleChoice {
  Schedule schedule;
  PartialOrder order;
  RestrictionMap restrictions;
  ScheduleCost cost;
};

// Every distinct schedule with its restrictions and cost, in the
// deterministic order produced by distinct_schedules.
std::vector<ScheduleChoice> analyze_schedules(const Pattern& p,
                                              const CostParams& params);

// Minimum-cost choice; ties broken by lexicographically smaller schedule.
// `index` is the position within analyze_schedules output.
struct SelectedSchedule {
  ScheduleChoice choice;
  size_t index = 0;
};

SelectedSchedule select_schedule(const Pattern& p, const CostParams& params);

}  // namespace symmine
