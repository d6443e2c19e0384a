#include "symmine/cost_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "symmine/error.hpp"

namespace symmine {

namespace {

// Reachability over relation positions: closed[i][j] == value at level j is
// (transitively) forced below value at level i.
std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices>
closure_by_position(const Schedule& s, const PartialOrder& order) {
  std::vector<int> pos(s.size());
  for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices> closed{};
  for (const auto& [a, b] : order.relations) closed[pos[a]][pos[b]] = true;
  const int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (closed[i][k])
        for (int j = 0; j < n; ++j)
          if (closed[k][j]) closed[i][j] = true;
  return closed;
}

}  // namespace

std::vector<std::pair<int, double>> restriction_probabilities(
    const Schedule& s, const PartialOrder& order) {
  const auto closed = closure_by_position(s, order);
  const int n = static_cast<int>(s.size());
  std::vector<std::pair<int, double>> out;
  out.reserve(n);
  double cum = 1.0;
  for (int i = 0; i < n; ++i) {
    int z = 1;
    for (int j = i + 1; j < n; ++j)
      if (closed[i][j]) ++z;
    cum /= z;
    out.emplace_back(z, cum);
  }
  return out;
}

ScheduleCost estimate_cost(const Pattern& p, const Schedule& s,
                           const PartialOrder& order, const CostParams& params) {
  if (params.n_model < 2.0) throw InputError("model graph needs at least 2 vertices");
  const double prob = params.edge_prob();
  if (!(prob > 0.0 && prob < 1.0)) throw InputError("model edge probability must be in (0,1)");

  const int n = static_cast<int>(s.size());
  const auto z_cum = restriction_probabilities(s, order);

  // Per-level source counts as the compiled loops will see them.
  std::vector<int> intersect_count(n, 0), diff_count(n, 0);
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p.has_edge(s[j], s[i])) {
        ++intersect_count[i];
      } else {
        ++diff_count[i];
      }
    }
  }

  ScheduleCost cost;
  cost.per_level.reserve(n);
  double trip_product = 1.0;  // product of expected set sizes through level i
  for (int i = 0; i < n; ++i) {
    LevelEstimate level;
    level.z = z_cum[i].first;
    level.cum_prob = z_cum[i].second;
    if (i == 0) {
      level.size = params.n_model;
    } else {
      level.k1 = intersect_count[i] - 1;
      level.k2 = diff_count[i];
      level.size = params.n_model * std::pow(prob, level.k1 + 1) *
                   std::pow(1.0 - prob, level.k2);
    }
    trip_product *= level.size;
    // Iterations that actually execute at this level, times the linear-scan
    // work of assembling the next level's candidate set.
    const double iterations = level.cum_prob * trip_product;
    const double work = (i + 1 < n)
                            ? (intersect_count[i + 1] + diff_count[i + 1]) *
                                  params.n_model * prob
                            : 1.0;
    cost.total += iterations * work;
    cost.per_level.push_back(level);
  }
  return cost;
}

std::vector<ScheduleChoice> analyze_schedules(const Pattern& p,
                                              const CostParams& params) {
  const AutomorphismGroup aut = automorphisms(p);
  std::vector<ScheduleChoice> out;
  for (Schedule& s : distinct_schedules(p, aut)) {
    ScheduleChoice choice;
    choice.order = generate_restrictions(p, s, aut);
    choice.restrictions = minimize_restrictions(s, choice.order);
    choice.cost = estimate_cost(p, s, choice.order, params);
    choice.schedule = std::move(s);
    out.push_back(std::move(choice));
  }
  return out;
}

SelectedSchedule select_schedule(const Pattern& p, const CostParams& params) {
  std::vector<ScheduleChoice> all = analyze_schedules(p, params);
  size_t best = 0;
  for (size_t i = 1; i < all.size(); ++i) {
    if (all[i].cost.total < all[best].cost.total ||
        (all[i].cost.total == all[best].cost.total &&
         all[i].schedule < all[best].schedule)) {
      best = i;
    }
  }
  return {std::move(all[best]), best};
}

}  // namespace symmine
