#include "symmine/plan.hpp"

#include <sstream>

#include "symmine/error.hpp"

namespace symmine {

Plan compile_plan(const Pattern& p, const Schedule& s, const RestrictionMap& rm,
                  PlanOptions options) {
  if (!schedule_valid(p, s)) throw InputError("schedule is not valid for the pattern");
  Plan plan{p, s, {}, options};
  const int n = p.size();
  plan.levels.resize(n);
  for (int i = 1; i < n; ++i) {
    PlanLevel& level = plan.levels[i];
    for (int j = 0; j < i; ++j) {
      if (p.has_edge(s[j], s[i])) {
        level.intersect_sources.push_back(j);
      } else {
        level.diff_sources.push_back(j);
      }
    }
    if (options.use_restrictions && i < static_cast<int>(rm.size())) {
      level.restriction_parent = rm[i];
    }
  }
  return plan;
}

nlohmann::ordered_json plan_to_json(const Plan& plan) {
  nlohmann::ordered_json j;
  j["pattern"] = {{"n", plan.pattern.size()}, {"edges", plan.pattern.edges()}};
  j["schedule"] = plan.schedule;
  j["levels"] = nlohmann::ordered_json::array();
  for (const PlanLevel& level : plan.levels) {
    nlohmann::ordered_json lj;
    lj["intersect"] = level.intersect_sources;
    lj["diff"] = level.diff_sources;
    if (level.restriction_parent == kNoParent) {
      lj["parent"] = nullptr;
    } else {
      lj["parent"] = level.restriction_parent;
    }
    j["levels"].push_back(std::move(lj));
  }
  j["options"] = {{"use_restrictions", plan.options.use_restrictions},
                  {"use_bounds", plan.options.use_bounds}};
  return j;
}

Plan plan_from_json(const nlohmann::json& j) {
  try {
    Pattern pattern(j.at("pattern").at("n").get<int>(),
                    j.at("pattern").at("edges").get<std::vector<std::pair<int, int>>>());
    Schedule schedule = j.at("schedule").get<Schedule>();
    PlanOptions options{j.at("options").at("use_restrictions").get<bool>(),
                        j.at("options").at("use_bounds").get<bool>()};
    RestrictionMap rm(schedule.size(), kNoParent);
    const auto& levels = j.at("levels");
    if (levels.size() != schedule.size()) throw InputError("plan level count mismatch");
    for (size_t i = 0; i < levels.size(); ++i) {
      const auto& parent = levels[i].at("parent");
      if (!parent.is_null()) rm[i] = parent.get<int>();
    }
    Plan plan = compile_plan(pattern, schedule, rm, options);
    // The sources are derived data; reject JSON that disagrees with them.
    for (size_t i = 0; i < levels.size(); ++i) {
      if (levels[i].at("intersect").get<std::vector<int>>() != plan.levels[i].intersect_sources ||
          levels[i].at("diff").get<std::vector<int>>() != plan.levels[i].diff_sources) {
        throw InputError("plan level sources do not match the pattern and schedule");
      }
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad plan JSON: ") + e.what());
  }
}

std::string plan_pseudocode(const Plan& plan) {
  std::ostringstream out;
  const int n = static_cast<int>(plan.levels.size());
  out << "count = 0\n";
  std::string indent;
  for (int i = 0; i < n; ++i) {
    const PlanLevel& level = plan.levels[i];
    out << indent << "for v" << i << " in ";
    if (i == 0) {
      out << "V(G)";
    } else {
      std::string expr;
      for (int src : level.intersect_sources) {
        if (!expr.empty()) expr += " & ";
        expr += "N(v" + std::to_string(src) + ")";
      }
      if (level.intersect_sources.size() > 1 && !level.diff_sources.empty()) {
        expr = "(" + expr + ")";
      }
      for (int src : level.diff_sources) {
        expr += " - N(v" + std::to_string(src) + ")";
      }
      out << expr;
    }
    if (level.restriction_parent != kNoParent) {
      out << " where v" << i << " < v" << level.restriction_parent;
    }
    out << ":\n";
    indent += "  ";
  }
  out << indent << "count += 1\n";
  return out.str();
}

}  // namespace symmine
