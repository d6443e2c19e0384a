#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "symmine/error.hpp"
#include "symmine/pattern.hpp"

using namespace symmine;

TEST_CASE("parse_pattern accepts the documented format") {
  const Pattern tri = parse_pattern("3\n0 1\n1 2\n0 2");
  CHECK(tri.size() == 3);
  CHECK(tri.edge_count() == 3);

  const Pattern rect = parse_pattern("4\n0 1\n0 2\n1 3\n2 3");
  CHECK(rect == named_pattern("rectangle"));

  const Pattern commented = parse_pattern("# header\n3 # n\n0 1\n# middle\n1 2\n");
  CHECK(commented.edge_count() == 2);
}

TEST_CASE("parse_pattern rejects bad input") {
  CHECK_THROWS_AS(parse_pattern("3\n0 1"), InputError);           // vertex 2 isolated
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n1 x"), InputError);      // malformed line
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n1 2 3"), InputError);    // trailing token
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n1 3"), InputError);      // label out of range
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n1 1"), InputError);      // self-loop
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n0 1\n1 2"), InputError); // duplicate edge
  CHECK_THROWS_AS(parse_pattern("3\n0 1\n1 0\n1 2"), InputError); // duplicate, reversed
  CHECK_THROWS_AS(parse_pattern("9\n0 1"), InputError);           // too large
  CHECK_THROWS_AS(parse_pattern("1\n"), InputError);
  CHECK_THROWS_AS(parse_pattern(""), InputError);
  CHECK_THROWS_AS(parse_pattern("# only comments\n"), InputError);
}

TEST_CASE("named patterns have the expected shapes") {
  CHECK(named_pattern("clique", 4).edge_count() == 6);
  CHECK(named_pattern("pentagon").size() == 5);
  CHECK(named_pattern("pentagon").edge_count() == 5);
  const Pattern tailed = named_pattern("tailed_triangle");
  CHECK(tailed.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(named_pattern("house").edge_count() == 6);
  CHECK(named_pattern("hourglass").edge_count() == 6);
  CHECK(named_pattern("star", 4).edge_count() == 3);
  CHECK(named_pattern("path", 5).edge_count() == 4);

  CHECK_THROWS_AS(named_pattern("heptagon"), InputError);
  CHECK_THROWS_AS(named_pattern("clique", 9), InputError);
  CHECK_THROWS_AS(named_pattern("clique", 1), InputError);
  CHECK_THROWS_AS(named_pattern("clique"), InputError);
  CHECK_THROWS_AS(named_pattern("triangle", 3), InputError);
  CHECK_THROWS_AS(named_pattern("clique_minus", 2), InputError);  // disconnected
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphisms(named_pattern("triangle")).multiplicity() == 6);
  CHECK(automorphisms(named_pattern("rectangle")).multiplicity() == 8);
  CHECK(automorphisms(named_pattern("tailed_triangle")).multiplicity() == 2);
  CHECK(automorphisms(named_pattern("pentagon")).multiplicity() == 10);
  CHECK(automorphisms(named_pattern("clique_minus", 7)).multiplicity() == 240);
  for (int k = 2; k <= 6; ++k) {
    uint64_t factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    CHECK(automorphisms(named_pattern("clique", k)).multiplicity() == factorial);
    CHECK(automorphisms(named_pattern("path", k)).multiplicity() == 2);
  }
}

TEST_CASE("automorphism groups satisfy the group axioms") {
  for (const char* name : {"triangle", "rectangle", "tailed_triangle", "house"}) {
    const AutomorphismGroup group = automorphisms(named_pattern(name));
    const std::set<Permutation> members(group.members.begin(), group.members.end());
    Permutation identity(group.members.front().size());
    for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    CHECK(group.members.front() == identity);  // identity first == lexicographic min
    CHECK(std::is_sorted(group.members.begin(), group.members.end()));
    for (const Permutation& a : group.members) {
      CHECK(members.count(inverse(a)) == 1);
      for (const Permutation& b : group.members) {
        CHECK(members.count(compose(a, b)) == 1);
      }
    }
  }
}

TEST_CASE("group size is invariant under relabeling") {
  std::mt19937 gen(7);
  for (const char* name : {"tailed_triangle", "house", "pentagon"}) {
    const Pattern p = named_pattern(name);
    Permutation relabel(p.size());
    for (size_t i = 0; i < relabel.size(); ++i) relabel[i] = static_cast<int>(i);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(relabel.begin(), relabel.end(), gen);
      std::vector<std::pair<int, int>> edges;
      for (const auto& [a, b] : p.edges()) edges.emplace_back(relabel[a], relabel[b]);
      const Pattern q(p.size(), edges);
      CHECK(automorphisms(q).multiplicity() == automorphisms(p).multiplicity());
      CHECK(canonical_key(q) == canonical_key(p));
    }
  }
}

TEST_CASE("connected pattern universe sizes") {
  CHECK(connected_patterns(2).size() == 1);
  CHECK(connected_patterns(3).size() == 2);
  CHECK(connected_patterns(4).size() == 6);
  CHECK(connected_patterns(5).size() == 21);
  CHECK(connected_patterns(6).size() == 112);
  for (const Pattern& p : connected_patterns(4)) {
    CHECK(canonical_key(p) == p.adjacency_key());  // representatives are canonical
  }
}

TEST_CASE("adjacency bits and display names") {
  CHECK(adjacency_bits(named_pattern("triangle")) == "111");
  CHECK(pattern_display_name(named_pattern("triangle")) == "triangle");
  CHECK(pattern_display_name(named_pattern("path", 3)) == "wedge");
  CHECK(pattern_display_name(named_pattern("clique", 4)) == "clique4");
  CHECK(pattern_display_name(named_pattern("rectangle")) == "rectangle");
  const Pattern relabeled = parse_pattern("4\n3 2\n3 1\n0 2\n0 1");  // a rectangle
  CHECK(pattern_display_name(relabeled) == "rectangle");
}
