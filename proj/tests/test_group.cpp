#include <doctest.h>

#include <random>

#include "engelkit/corpus.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/group.hpp"

using namespace engelkit;

namespace {

FiniteGroup make_s3() {
  return FiniteGroup::close(
      {{"a", Permutation::parse("(1 2)", 3)}, {"b", Permutation::parse("(1 2 3)")}}, 10,
      "S3");
}

}  // namespace

TEST_CASE("closure of a single involution") {
  FiniteGroup G = FiniteGroup::close({{"a", Permutation::parse("(1 2)")}}, 10, "C2");
  CHECK(G.order() == 2);
  CHECK(G.mul(1, 1) == 0);
}

TEST_CASE("closure of S3 and the commutator convention") {
  FiniteGroup G = make_s3();
  REQUIRE(G.order() == 6);

  const int a = G.generator_elements()[0];  // (1 2)
  const int b = G.generator_elements()[1];  // (1 2 3)

  // [a,b] = a^-1 b^-1 a b evaluated directly on permutations
  Permutation pa = *G.permutation_of(a);
  Permutation pb = *G.permutation_of(b);
  Permutation direct = pa.inverse().then(pb.inverse()).then(pa).then(pb);
  CHECK(direct.to_cycles() == "(1 3 2)");
  CHECK(*G.permutation_of(G.comm(a, b)) == direct);

  // conjugation convention g^h = h^-1 g h
  CHECK(G.conj(a, b) == G.mul(G.inv(b), G.mul(a, b)));
}

TEST_CASE("order cap error") {
  CHECK_THROWS_AS(
      FiniteGroup::close({{"a", Permutation::parse("(1 2 3 4 5 6 7)")}}, 5, "C7"),
      OrderCapError);
}

TEST_CASE("engel commutator base cases") {
  FiniteGroup G = make_s3();
  const int a = G.generator_elements()[0];
  const int b = G.generator_elements()[1];
  for (int g = 0; g < G.order(); ++g) {
    CHECK(G.engel_comm(g, a, 0) == g);
    CHECK(G.engel_comm(g, 0, 1) == 0);
  }
  // (1 2), (1 2 3): two application of comm give the identity
  CHECK(G.engel_comm(a, b, 2) == 0);
  // commuting elements die at depth 1
  CHECK(G.engel_comm(b, G.mul(b, b), 1) == 0);
}

TEST_CASE("element orders and Lagrange over the full corpus") {
  for (const auto& G : corpus::default_corpus()) {
    CHECK(G.element_order(0) == 1);
    for (int g = 0; g < G.order(); ++g) CHECK(G.order() % G.element_order(g) == 0);
  }
  const FiniteGroup& S3 = corpus::by_name("S3");
  CHECK(S3.element_order(S3.generator_elements()[1]) == 3);
}

TEST_CASE("group laws hold on the tables") {
  std::mt19937_64 rng(7);
  for (const char* name : {"S4", "Q8", "Heis3", "D16"}) {
    const FiniteGroup& G = corpus::by_name(name);
    std::uniform_int_distribution<int> d(0, G.order() - 1);
    for (int k = 0; k < 2000; ++k) {
      const int g = d(rng), h = d(rng), t = d(rng);
      CHECK(G.mul(G.mul(g, h), t) == G.mul(g, G.mul(h, t)));
      CHECK(G.inv(G.inv(g)) == g);
      CHECK(G.comm(g, h) == G.inv(G.comm(h, g)));
    }
  }
}

TEST_CASE("engel commutator recursion against comm") {
  for (const char* name : {"S3", "Q8", "D6", "A4", "S4", "Dic3", "C12"}) {
    const FiniteGroup& G = corpus::by_name(name);
    REQUIRE(G.order() <= 48);
    for (int g = 0; g < G.order(); ++g)
      for (int x = 0; x < G.order(); ++x) {
        int e = g;
        for (int n = 1; n <= 6; ++n) {
          e = G.comm(e, x);
          CHECK(G.engel_comm(g, x, n) == e);
        }
      }
  }
}

TEST_CASE("word evaluation") {
  FiniteGroup G = make_s3();
  std::map<std::string, int> env{{"a", G.generator_elements()[0]},
                                 {"b", G.generator_elements()[1]}};
  CHECK(G.evaluate_word({}, env) == 0);
  CHECK(G.evaluate_word(parse_word("a a^{-1}", {"a", "b"}), env) == 0);
  CHECK(G.evaluate_word(parse_word("a^{-1}b^{-1}ab", {"a", "b"}), env) ==
        G.comm(env["a"], env["b"]));
  CHECK_THROWS_AS(G.evaluate_word(parse_word("c", {"c"}), env), UnknownNameError);
  CHECK(G.element_by_word("b^3") == 0);
  CHECK(G.element_by_word("1") == 0);
}

TEST_CASE("element words reproduce elements") {
  for (const char* name : {"S4", "Q8", "D8"}) {
    const FiniteGroup& G = corpus::by_name(name);
    for (int g = 0; g < G.order(); ++g) CHECK(G.element_by_word(G.element_word(g)) == g);
  }
}

TEST_CASE("deterministic numbering") {
  FiniteGroup a = make_s3();
  FiniteGroup b = make_s3();
  CHECK(a.order() == b.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) CHECK(a.mul(i, j) == b.mul(i, j));
}
