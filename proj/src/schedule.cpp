#include "symmine/schedule.hpp"

#include <algorithm>
#include <numeric>

namespace symmine {

bool schedule_valid(const Pattern& p, const Schedule& s) {
  const int n = p.size();
  if (static_cast<int>(s.size()) != n) return false;
  uint8_t seen = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const int v = s[i];
    if (v < 0 || v >= n || (seen & (1u << v))) return false;
    if (i > 0 && (p.neighbor_mask(v) & seen) == 0) return false;
    seen |= static_cast<uint8_t>(1u << v);
  }
  return true;
}

ScheduleList valid_schedules_exhaustive(const Pattern& p) {
  Schedule s(p.size());
  std::iota(s.begin(), s.end(), 0);
  ScheduleList out;
  do {
    if (schedule_valid(p, s)) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

namespace {

void extend_valid(const Pattern& p, Schedule& sched, uint8_t sched_mask,
                  uint8_t frontier, ScheduleList& out) {
  const int n = p.size();
  if (static_cast<int>(sched.size()) == n) {
    out.push_back(sched);
    return;
  }
  const uint8_t candidates = sched.empty() ? static_cast<uint8_t>((1u << n) - 1) : frontier;
  for (int v = 0; v < n; ++v) {
    if (!(candidates & (1u << v))) continue;
    const uint8_t mask = sched_mask | static_cast<uint8_t>(1u << v);
    const uint8_t next = static_cast<uint8_t>((frontier | p.neighbor_mask(v)) & ~mask);
    sched.push_back(v);
    extend_valid(p, sched, mask, next, out);
    sched.pop_back();
  }
}

// As extend_valid, but at every step the stabilizer of the scheduled prefix
// partitions the candidates into orbits and only the first member of each
// orbit is expanded: the schedules reachable through the others are exactly
// the automorphic images of the ones we already emit. Marks live on the
// stack of this invocation, so they only suppress later iterations of the
// same loop.
void extend_distinct(const Pattern& p, Schedule& sched, uint8_t sched_mask,
                     uint8_t frontier, const std::vector<Permutation>& aut,
                     ScheduleList& out) {
  const int n = p.size();
  if (static_cast<int>(sched.size()) == n) {
    out.push_back(sched);
    return;
  }
  const uint8_t candidates = sched.empty() ? static_cast<uint8_t>((1u << n) - 1) : frontier;
  uint8_t processed = 0;
  for (int v = 0; v < n; ++v) {
    if (!(candidates & (1u << v)) || (processed & (1u << v))) continue;
    std::vector<Permutation> stabilized;
    stabilized.reserve(aut.size());
    for (const Permutation& x : aut) {
      if (x[v] == v) {
        stabilized.push_back(x);
      } else {
        processed |= static_cast<uint8_t>(1u << x[v]);
      }
    }
    const uint8_t mask = sched_mask | static_cast<uint8_t>(1u << v);
    const uint8_t next = static_cast<uint8_t>((frontier | p.neighbor_mask(v)) & ~mask);
    sched.push_back(v);
    extend_distinct(p, sched, mask, next, stabilized, out);
    sched.pop_back();
  }
}

}  // namespace

ScheduleList valid_schedules_recursive(const Pattern& p) {
  ScheduleList out;
  Schedule sched;
  sched.reserve(p.size());
  extend_valid(p, sched, 0, 0, out);
  return out;
}

ScheduleList distinct_schedules(const Pattern& p, const AutomorphismGroup& aut) {
  ScheduleList out;
  Schedule sched;
  sched.reserve(p.size());
  extend_distinct(p, sched, 0, 0, aut.members, out);
  return out;
}

bool schedules_equivalent(const AutomorphismGroup& aut, const Schedule& s1,
                          const Schedule& s2) {
  if (s1.size() != s2.size()) return false;
  for (const Permutation& x : aut.members) {
    bool match = true;
    for (size_t i = 0; i < s1.size(); ++i) {
      if (x[s1[i]] != s2[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace symmine
