#include <doctest.h>

#include <random>

#include "engelkit/corpus.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/exponent.hpp"

using namespace engelkit;

TEST_CASE("parse trees are frozen for the notation examples") {
  // "2a-1" -> Sum[ +Product(Int 2, Gen a), -Int 1 ]
  ExponentExpr e = parse_exponent("2a-1");
  ExponentExpr expected = ExponentExpr::sum(
      {ExponentExpr::product(ExponentExpr::integer(2), ExponentExpr::gen('a')),
       ExponentExpr::integer(1)},
      {1, -1});
  CHECK(e == expected);

  CHECK(parse_exponent("1") == ExponentExpr::integer(1));

  // "(g+h)(-k)" -> Product(Sum[+g,+h], Sum[-k])
  ExponentExpr f = parse_exponent("(g+h)(-k)");
  ExponentExpr expected2 = ExponentExpr::product(
      ExponentExpr::sum({ExponentExpr::gen('g'), ExponentExpr::gen('h')}, {1, 1}),
      ExponentExpr::sum({ExponentExpr::gen('k')}, {-1}));
  CHECK(f == expected2);

  // "-a+2" -> Sum[-Gen a, +Int 2]
  CHECK(parse_exponent("-a+2") ==
        ExponentExpr::sum({ExponentExpr::gen('a'), ExponentExpr::integer(2)}, {-1, 1}));

  // juxtaposition binds tighter than +/-
  CHECK(parse_exponent("1+ab-1") ==
        ExponentExpr::sum({ExponentExpr::integer(1),
                           ExponentExpr::product(ExponentExpr::gen('a'), ExponentExpr::gen('b')),
                           ExponentExpr::integer(1)},
                          {1, 1, -1}));
}

TEST_CASE("parser error cases") {
  CHECK_THROWS_AS(parse_exponent(""), ParseError);
  CHECK_THROWS_AS(parse_exponent("   "), ParseError);
  CHECK_THROWS_AS(parse_exponent("(a+b"), ParseError);
  CHECK_THROWS_AS(parse_exponent("a+b)"), ParseError);
  CHECK_THROWS_AS(parse_exponent("a2"), ParseError);    // integer must lead its monomial
  CHECK_THROWS_AS(parse_exponent("a(2)"), ParseError);
  CHECK_THROWS_AS(parse_exponent("a*"), ParseError);
  CHECK_THROWS_AS(parse_exponent("+"), ParseError);
}

namespace {

ExponentExpr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 3);
  switch (kind(rng)) {
    case 0:
      return ExponentExpr::gen(static_cast<char>('a' + rng() % 4));
    case 1:
      return ExponentExpr::integer(static_cast<long long>(rng() % 7));
    case 2: {
      // product: integer only allowed on the left
      ExponentExpr l = rng() % 3 == 0
                           ? ExponentExpr::integer(static_cast<long long>(rng() % 5))
                           : random_expr(rng, depth - 1);
      ExponentExpr r = random_expr(rng, depth - 1);
      while (r.kind == ExponentExpr::Kind::kInt) r = random_expr(rng, depth - 1);
      return ExponentExpr::product(std::move(l), std::move(r));
    }
    default: {
      std::vector<ExponentExpr> terms;
      std::vector<int> signs;
      std::uniform_int_distribution<int> cnt(1, 3);
      int k = cnt(rng);
      for (int i = 0; i < k; ++i) {
        terms.push_back(random_expr(rng, depth - 1));
        signs.push_back(rng() % 2 ? 1 : -1);
      }
      if (k == 1 && signs[0] == 1) signs[0] = -1;  // keep the node non-degenerate
      return ExponentExpr::sum(std::move(terms), std::move(signs));
    }
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random trees") {
  std::mt19937_64 rng(0xE117);
  for (int k = 0; k < 300; ++k) {
    ExponentExpr e = random_expr(rng, 3);
    std::string text = print_exponent(e);
    CAPTURE(text);
    ExponentExpr back = parse_exponent(text);
    CHECK(back == e);
  }
}

TEST_CASE("evaluation semantics basics") {
  const FiniteGroup& G = corpus::by_name("S4");
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(0, G.order() - 1);
  const ExponentExpr one = parse_exponent("1");
  const ExponentExpr gmg = parse_exponent("g-g");
  for (int k = 0; k < 200; ++k) {
    int u = d(rng), g = d(rng);
    std::map<char, int> env{{'g', g}};
    CHECK(eval_exponent(G, u, one, env) == u);
    CHECK(eval_exponent(G, u, gmg, env) == 0);
  }
  CHECK_THROWS_AS(eval_exponent(G, 1, parse_exponent("z"), {}), UnknownNameError);
}

TEST_CASE("a bare integer power matches group powering") {
  const FiniteGroup& G = corpus::by_name("D8");
  const ExponentExpr three = parse_exponent("3");
  for (int u = 0; u < G.order(); ++u) CHECK(eval_exponent(G, u, three, {}) == G.power(u, 3));
}

TEST_CASE("the product identity u^{(g+h)(-k)} = u^{-hk-gk}") {
  const ExponentExpr lhs = parse_exponent("(g+h)(-k)");
  const ExponentExpr rhs = parse_exponent("-hk-gk");
  for (const char* name : {"S4", "D6", "Q8", "Heis3", "S3xC4"}) {
    const FiniteGroup& G = corpus::by_name(name);
    REQUIRE(G.order() <= 48);
    for (int u = 0; u < G.order(); ++u)
      for (int g = 0; g < G.order(); g += 3)
        for (int h = 0; h < G.order(); h += 3)
          for (int k = 0; k < G.order(); k += 3) {
            std::map<char, int> env{{'g', g}, {'h', h}, {'k', k}};
            CHECK(eval_exponent(G, u, lhs, env) == eval_exponent(G, u, rhs, env));
          }
  }
}

TEST_CASE("the two distinguished orderings really differ somewhere") {
  // (g+h)(-k) evaluates as u^{-hk-gk}; the reordered u^{-gk-hk} must differ
  // for some quadruple in some corpus group.
  const ExponentExpr e1 = parse_exponent("(g+h)(-k)");
  const ExponentExpr e2 = parse_exponent("-gk-hk");
  bool differ = false;
  const FiniteGroup& G = corpus::by_name("S4");
  for (int u = 0; u < G.order() && !differ; ++u)
    for (int g = 0; g < G.order() && !differ; ++g)
      for (int h = 0; h < G.order() && !differ; ++h)
        for (int k = 0; k < G.order() && !differ; ++k) {
          std::map<char, int> env{{'g', g}, {'h', h}, {'k', k}};
          if (eval_exponent(G, u, e1, env) != eval_exponent(G, u, e2, env)) differ = true;
        }
  CHECK(differ);
}

TEST_CASE("remark-style identities for left 3-Engel elements (sample)") {
  const ExponentExpr square_rule = parse_exponent("2a-1");
  const ExponentExpr inv_rule = parse_exponent("-a+2");
  for (const char* name : {"S3", "S4", "Q8", "D8", "Heis3"}) {
    const FiniteGroup& G = corpus::by_name(name);
    Bitset l3 = left_engel_set(G, 3).members;
    l3.for_each([&](int a) {
      std::map<char, int> env{{'a', a}};
      for (int x = 0; x < G.order(); ++x) {
        int u = G.comm(a, x);
        CHECK(eval_exponent(G, u, square_rule, env) == G.conj(G.conj(u, a), a));
        CHECK(eval_exponent(G, u, inv_rule, env) == G.conj(u, G.inv(a)));
      }
    });
  }
}
