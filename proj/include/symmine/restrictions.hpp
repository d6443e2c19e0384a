#pragma once

#include "symmine/schedule.hpp"

namespace symmine {

inline constexpr int kNoParent = -1;

// Symmetry-breaking ID constraints for a (pattern, schedule) pair. A relation
// (a, b) on labels means: in an accepted embedding, the graph vertex mapped
// to a must have a larger ID than the one mapped to b. Enforcing all
// relations leaves exactly one mapping per instance.
struct PartialOrder {
  // Sorted by (schedule position of a, schedule position of b); deduplicated.
  std::vector<std::pair<int, int>> relations;
  // Orbit size of each schedule vertex under the stabilizer of its prefix
  // (including the vertex itself). The product over all positions equals the
  // automorphism group size.
  std::vector<int> orbit_sizes;
};

// parents[k] = schedule position whose value upper-bounds level k's value,
// or kNoParent. At most one check per level suffices: any other upper bound
// on level k is transitively implied through this one.
using RestrictionMap = std::vector<int>;

// Walk the schedule, shrinking the automorphism group to the stabilizer of
// the processed prefix; every vertex an automorphism still moves v onto
// yields one relation (v, image).
PartialOrder generate_restrictions(const Pattern& p, const Schedule& s,
                                   const AutomorphismGroup& aut);

// Keep, per schedule position, only the relation whose source sits latest in
// the schedule.
RestrictionMap minimize_restrictions(const Schedule& s, const PartialOrder& order);

}  // namespace symmine
