#include "ginv/errors.hpp"
#include "ginv/perm_group.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace ginv;

namespace {

// Brute-force closure, the oracle the BSGS order is checked against.
std::size_t closure_size(const std::vector<Permutation> &gens,
                         unsigned degree, std::size_t cap = 200000) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier{Permutation(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation &x : frontier)
      for (const Permutation &g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    REQUIRE(seen.size() <= cap);
    frontier = std::move(next);
  }
  return seen.size();
}

PermGroup build(unsigned degree, const std::vector<const char *> &cycles) {
  std::vector<Permutation> gens;
  for (const char *c : cycles)
    gens.push_back(Permutation::parse_cycles(c, degree));
  return PermGroup(degree, gens);
}

} // namespace

TEST_CASE("order agrees with exhaustive closure") {
  struct Sample {
    unsigned degree;
    std::vector<const char *> gens;
  };
  const Sample samples[] = {
      {4, {"(1 2)", "(1 2 3 4)"}},                       // S4
      {4, {"(1 2 3 4)", "(1 3)"}},                       // D8
      {8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}}, // Q8, regular
      {5, {"(1 2 3)", "(3 4 5)"}},                       // A5
      {7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}},        // PSL(3,2)
      {6, {"(1 2 3 4 5 6)"}},                            // C6
      {5, {"(1 2)", "(3 4 5)"}},                         // C2 x C3
  };
  for (const Sample &s : samples) {
    PermGroup g = build(s.degree, s.gens);
    std::vector<Permutation> gens;
    for (const char *c : s.gens)
      gens.push_back(Permutation::parse_cycles(c, s.degree));
    CHECK(g.order() == closure_size(gens, s.degree));
  }
}

TEST_CASE("known orders of standard groups") {
  CHECK(build(4, {"(1 2)", "(1 2 3 4)"}).order() == 24);
  CHECK(build(8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}).order() == 8);
  CHECK(build(6, {"(1 2)", "(1 2 3 4 5 6)"}).order() == 720);
  CHECK(build(5, {"(1 2 3)", "(3 4 5)"}).order() == 60);
}

TEST_CASE("membership") {
  PermGroup a4 = build(4, {"(1 2 3)", "(2 3 4)"});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Permutation::parse_cycles("(1 2)(3 4)", 4)));
  CHECK(a4.contains(Permutation(4)));
  CHECK_FALSE(a4.contains(Permutation::parse_cycles("(1 2)", 4)));
  CHECK_FALSE(a4.contains(Permutation::parse_cycles("(1 2 3 4)", 4)));
}

TEST_CASE("element materialization") {
  PermGroup d8 = build(4, {"(1 2 3 4)", "(1 3)"});
  const auto &elems = d8.elements();
  REQUIRE(elems.size() == 8);
  CHECK(elems[0].is_identity());
  for (const Permutation &x : elems)
    CHECK(d8.contains(x));
  // the index lookup inverts the list
  for (uint32_t i = 0; i < elems.size(); ++i)
    CHECK(d8.element_index(elems[i]) == i);
}

TEST_CASE("trivial group") {
  PermGroup t = PermGroup::trivial(3);
  CHECK(t.is_trivial());
  CHECK(t.order() == 1);
  CHECK(t.generators().empty());
  CHECK(t.elements().size() == 1);
}

TEST_CASE("known order hint must match") {
  std::vector<Permutation> gens{Permutation::parse_cycles("(1 2 3)", 3)};
  PermGroup with_hint(3, gens, Integer(3));
  CHECK(with_hint.order() == 3);
  CHECK_THROWS_AS(PermGroup(3, gens, Integer(6)), ComputeError);
}

TEST_CASE("generator validation") {
  std::vector<Permutation> mixed{Permutation::parse_cycles("(1 2)", 3),
                                 Permutation::parse_cycles("(1 2)", 4)};
  CHECK_THROWS_AS(PermGroup(3, mixed), ParseError);
}

TEST_CASE("subgroup construction checks membership") {
  PermGroup s4 = build(4, {"(1 2)", "(1 2 3 4)"});
  PermGroup v4 = build(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Subgroup sub = make_subgroup(s4, v4);
  CHECK(sub.group.order() == 4);
  PermGroup s5 = build(5, {"(1 2)", "(1 2 3 4 5)"});
  CHECK_THROWS_AS(make_subgroup(s4, s5), ParseError);
}

TEST_CASE("group from elements recovers the group") {
  PermGroup a4 = build(4, {"(1 2 3)", "(2 3 4)"});
  PermGroup again = group_from_elements(4, a4.elements());
  CHECK(again.order() == 12);
  for (const Permutation &g : again.generators())
    CHECK(a4.contains(g));
}
