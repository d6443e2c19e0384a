#pragma once

#include "symmine/pattern.hpp"

namespace symmine {

// A discovery order over pattern labels. Valid when every entry after the
// first is adjacent to some earlier entry, so each loop level can be built
// from earlier neighbor sets.
using Schedule = std::vector<int>;
using ScheduleList = std::vector<Schedule>;

bool schedule_valid(const Pattern& p, const Schedule& s);

// Filter all n! label orders by validity; lexicographic output. Testing
// oracle for the recursive generators.
ScheduleList valid_schedules_exhaustive(const Pattern& p);

// Recursively extend partial schedules by frontier vertices only. Same set
// as the exhaustive filter, enumerated without touching invalid prefixes.
ScheduleList valid_schedules_recursive(const Pattern& p);

// One representative per equivalence class of valid schedules: at each
// extension step the current stabilizer partitions the frontier into orbits
// and only the first vertex of each orbit is expanded. Produces
// |valid| / |aut| schedules, no two of which compile to the same program.
ScheduleList distinct_schedules(const Pattern& p, const AutomorphismGroup& aut);

// True iff some automorphism maps s1 pointwise onto s2.
bool schedules_equivalent(const AutomorphismGroup& aut, const Schedule& s1,
                          const Schedule& s2);

}  // namespace symmine
