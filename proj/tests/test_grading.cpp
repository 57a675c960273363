#include <doctest.h>

#include <set>

#include "paralg/grading.hpp"

using namespace paralg;

TEST_CASE("degree addition matches the mod-2 rule") {
  CHECK(degree_add({1, 0}, {1, 1}) == Degree{0, 1});
  CHECK(degree_add({1, 1}, {1, 1}) == Degree{0, 0});
  for (Degree d : all_degrees()) {
    CHECK(degree_add({0, 0}, d) == d);  // identity
    CHECK(degree_add(d, d) == Degree{0, 0});  // self-inverse
  }
}

TEST_CASE("degree addition is an abelian group law") {
  for (Degree a : all_degrees()) {
    for (Degree b : all_degrees()) {
      CHECK(degree_add(a, b) == degree_add(b, a));
      for (Degree c : all_degrees()) {
        CHECK(degree_add(degree_add(a, b), c) == degree_add(a, degree_add(b, c)));
      }
    }
  }
}

TEST_CASE("degree dot product") {
  CHECK(degree_dot({1, 0}, {1, 0}) == 1);
  CHECK(degree_dot({1, 0}, {0, 1}) == 0);
  CHECK(degree_dot({1, 1}, {1, 1}) == 2);
}

TEST_CASE("dot distributes over addition mod 2") {
  for (Degree a : all_degrees()) {
    for (Degree b : all_degrees()) {
      for (Degree c : all_degrees()) {
        CHECK(degree_dot(a, degree_add(b, c)) % 2 ==
              (degree_dot(a, b) + degree_dot(a, c)) % 2);
      }
    }
  }
}

TEST_CASE("bracket kind selection") {
  CHECK(bracket_kind({1, 0}, {1, 0}) == BracketKind::Anticommutator);
  CHECK(bracket_kind({1, 0}, {0, 1}) == BracketKind::Commutator);
  CHECK(bracket_kind({1, 0}, {1, 1}) == BracketKind::Anticommutator);
  for (Degree a : all_degrees()) {
    for (Degree b : all_degrees()) CHECK(bracket_kind(a, b) == bracket_kind(b, a));
  }
}

TEST_CASE("Z2 embedding: (1,1) self-pairs commute, (0,1) is the Fermi slot") {
  // Restricting to {(0,0), (1,1)} gives only commutators.
  CHECK(bracket_kind({1, 1}, {1, 1}) == BracketKind::Commutator);
  // The usual Z2 superalgebra embeds as {(0,0) = Bose, (0,1) = Fermi}.
  CHECK(bracket_kind({0, 1}, {0, 1}) == BracketKind::Anticommutator);
}

TEST_CASE("degrees are totally ordered for deterministic reporting") {
  auto d = all_degrees();
  CHECK(std::set<Degree>(d.begin(), d.end()).size() == 4);
  CHECK(Degree{0, 0} < Degree{0, 1});
  CHECK(Degree{0, 1} < Degree{1, 0});
  CHECK(Degree{1, 0} < Degree{1, 1});
}
