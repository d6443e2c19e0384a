#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "symmine/restrictions.hpp"

namespace symmine {

// One loop level of the nested-loop program. Sources are earlier level
// indices; together they cover every earlier level, so a completed embedding
// is guaranteed to match the pattern with no isomorphism test afterwards.
struct PlanLevel {
  std::vector<int> intersect_sources;  // pattern edge to this level's vertex
  std::vector<int> diff_sources;       // pattern non-edge
  int restriction_parent = kNoParent;  // value here must be < value at parent
};

struct PlanOptions {
  bool use_restrictions = true;
  bool use_bounds = true;
};

struct Plan {
  Pattern pattern;
  Schedule schedule;
  std::vector<PlanLevel> levels;
  PlanOptions options;

  RestrictionMap restriction_map() const {
    RestrictionMap rm;
    rm.reserve(levels.size());
    for (const auto& level : levels) rm.push_back(level.restriction_parent);
    return rm;
  }
};

// Lower a (schedule, restriction map) pair to per-level set operations.
// With use_restrictions off the parents are dropped and the plan counts
// every mapping instead of every instance.
Plan compile_plan(const Pattern& p, const Schedule& s, const RestrictionMap& rm,
                  PlanOptions options = {});

// Stable-keyed schema: {pattern, schedule, levels:[{intersect, diff, parent}],
// options}. parent is null when absent.
nlohmann::ordered_json plan_to_json(const Plan& plan);
Plan plan_from_json(const nlohmann::json& j);

// Nested-loop rendering with one ID check per loop.
std::string plan_pseudocode(const Plan& plan);

}  // namespace symmine
