#include <doctest.h>

#include "engelkit/errors.hpp"
#include "engelkit/permutation.hpp"

using namespace engelkit;

TEST_CASE("cycle parsing basics") {
  CHECK(Permutation::parse("()").is_identity());
  CHECK(Permutation::parse("()", 4).degree() == 4);

  Permutation t = Permutation::parse("(1 2)");
  CHECK(t.apply(0) == 1);
  CHECK(t.apply(1) == 0);

  Permutation p = Permutation::parse("(1 2 3)(4 5)");
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 0);
  CHECK(p.apply(3) == 4);
  CHECK(p.apply(4) == 3);
}

TEST_CASE("non-disjoint cycles compose left to right") {
  // (1 2) then (2 3): 1->2->3, 2->1, 3->2
  Permutation p = Permutation::parse("(1 2)(2 3)");
  CHECK(p.apply(0) == 2);
  CHECK(p.apply(1) == 0);
  CHECK(p.apply(2) == 1);
  CHECK(p.to_cycles() == "(1 3 2)");
}

TEST_CASE("cycle printing is normalized") {
  CHECK(Permutation::parse("(2 3 1)").to_cycles() == "(1 2 3)");
  CHECK(Permutation::parse("(4 5)(1 2 3)").to_cycles() == "(1 2 3)(4 5)");
  CHECK(Permutation::identity(5).to_cycles() == "()");
}

TEST_CASE("parse/print round-trips up to normalization") {
  const char* cases[] = {"(1 2 3)(4 5)", "(1 5)(2 4)", "(2 6 4)", "()"};
  for (const char* c : cases) {
    Permutation p = Permutation::parse(c, 6);
    CHECK(Permutation::parse(p.to_cycles(), 6) == p);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Permutation::parse("(1 2"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1 2)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1 2 1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1 x)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse(""), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 1)"), ParseError);
}

TEST_CASE("inverse and composition") {
  Permutation p = Permutation::parse("(1 2 3 4)");
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("generator file parsing") {
  auto gens = parse_generator_file("# comment\na = (1 2 3)(4 5)\nb= (1 2) # trailing\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].name == "a");
  CHECK(gens[1].name == "b");
  CHECK(gens[0].perm.degree() == gens[1].perm.degree());
  CHECK_THROWS_AS(parse_generator_file("a (1 2)"), ParseError);
  CHECK_THROWS_AS(parse_generator_file("a = (1 2)\na = (1 3)"), ParseError);
  CHECK_THROWS_AS(parse_generator_file("# nothing\n"), ParseError);
}
