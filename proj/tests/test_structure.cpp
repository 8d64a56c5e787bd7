#include <doctest.h>

#include <random>

#include "engelkit/corpus.hpp"
#include "engelkit/subgroup.hpp"

using namespace engelkit;

TEST_CASE("subgroup generation in S3") {
  const FiniteGroup& G = corpus::by_name("S3");
  CHECK(subgroup_generate(G, {}).size() == 1);
  const int a = G.generator_elements()[0];  // (1 2)
  const int b = G.generator_elements()[1];  // (1 2 3)
  CHECK(subgroup_generate(G, {b}).size() == 3);
  CHECK(subgroup_generate(G, {a}).size() == 2);
  // two transpositions generate the whole group
  const int a2 = G.conj(a, b);
  CHECK(subgroup_generate(G, {a, a2}).size() == 6);
}

TEST_CASE("normal closures in S3") {
  const FiniteGroup& G = corpus::by_name("S3");
  const int a = G.generator_elements()[0];
  const int b = G.generator_elements()[1];
  CHECK(normal_closure(G, {b}).size() == 3);
  CHECK(normal_closure(G, {a}).size() == 6);
  // central element: closure is the cyclic subgroup
  const FiniteGroup& Q = corpus::by_name("Q8");
  const int m1 = Q.power(Q.generator_elements()[0], 2);  // the central involution
  CHECK(normal_closure(Q, {m1}).size() == 2);
}

TEST_CASE("normal closure output is conjugation stable") {
  for (const char* name : {"S3", "S4", "A5", "D8", "Heis3"}) {
    const FiniteGroup& G = corpus::by_name(name);
    for (int x = 0; x < G.order(); x += 3) {
      Subgroup n = normal_closure(G, {x});
      CHECK(is_normal(n));
    }
  }
}

TEST_CASE("centralizer and center") {
  const FiniteGroup& G = corpus::by_name("S3");
  CHECK(centralizer(G, {0}).size() == 6);
  CHECK(center(G).size() == 1);
  CHECK(center(corpus::by_name("Q8")).size() == 2);
  CHECK(center(corpus::by_name("Heis3")).size() == 3);
}

TEST_CASE("commutator subgroups") {
  const FiniteGroup& G = corpus::by_name("S3");
  Subgroup whole = whole_group(G);
  CHECK(commutator_subgroup(whole, whole).size() == 3);
  CHECK(commutator_subgroup(trivial_subgroup(G), whole).size() == 1);
  const FiniteGroup& A = corpus::by_name("C12");
  Subgroup wa = whole_group(A);
  CHECK(commutator_subgroup(wa, wa).size() == 1);
}

TEST_CASE("lower central series and nilpotency class") {
  CHECK(nilpotency_class(whole_group(corpus::by_name("C1"))) == 0);
  CHECK(nilpotency_class(whole_group(corpus::by_name("C12"))) == 1);
  CHECK(nilpotency_class(whole_group(corpus::by_name("Q8"))) == 2);
  CHECK(nilpotency_class(whole_group(corpus::by_name("Heis5"))) == 2);
  CHECK(nilpotency_class(whole_group(corpus::by_name("D16"))) == 4);
  CHECK_FALSE(nilpotency_class(whole_group(corpus::by_name("S3"))).has_value());

  // S3's series stabilizes at the order-3 subgroup
  Series s = lower_central_series(whole_group(corpus::by_name("S3")));
  CHECK(s.terms.back().size() == 3);

  // Q8 series: Q8 > {±1} > 1
  Series q = lower_central_series(whole_group(corpus::by_name("Q8")));
  REQUIRE(q.terms.size() == 3);
  CHECK(q.terms[1].size() == 2);
  CHECK(q.terms[2].size() == 1);
}

TEST_CASE("series are descending and stabilize quickly") {
  for (const char* name : {"S4", "D16", "Heis3", "A5", "F20"}) {
    const FiniteGroup& G = corpus::by_name(name);
    for (Series s :
         {lower_central_series(whole_group(G)), derived_series(whole_group(G))}) {
      for (size_t i = 1; i < s.terms.size(); ++i) {
        CHECK(s.terms[i].members.is_subset_of(s.terms[i - 1].members));
        CHECK(s.terms[i].size() < s.terms[i - 1].size());
      }
    }
  }
}

TEST_CASE("derived series and solubility") {
  CHECK(derived_length(whole_group(corpus::by_name("C12"))) == 1);
  CHECK(derived_length(whole_group(corpus::by_name("S3"))) == 2);
  CHECK(derived_length(whole_group(corpus::by_name("C1"))) == 0);
  CHECK_FALSE(derived_length(whole_group(corpus::by_name("A5"))).has_value());
  CHECK_FALSE(derived_length(whole_group(corpus::by_name("S5"))).has_value());

  // S4 > A4 > V4 > 1
  const FiniteGroup& S4 = corpus::by_name("S4");
  Series d = derived_series(whole_group(S4));
  REQUIRE(d.terms.size() == 4);
  CHECK(d.terms[1].size() == 12);
  CHECK(d.terms[2].size() == 4);
  CHECK(d.terms[3].size() == 1);
  CHECK(derived_length(whole_group(S4)) == 3);
}

TEST_CASE("subnormality") {
  const FiniteGroup& G = corpus::by_name("S3");
  CHECK(is_subnormal(G, whole_group(G)));
  CHECK(is_subnormal(G, subgroup_generate(G, {G.generator_elements()[1]})));  // A3, normal
  CHECK_FALSE(is_subnormal(G, subgroup_generate(G, {G.generator_elements()[0]})));

  // in a nilpotent group every subgroup is subnormal
  const FiniteGroup& D = corpus::by_name("D8");
  for (int x = 0; x < D.order(); ++x)
    CHECK(is_subnormal(D, subgroup_generate(D, {x})));
}

TEST_CASE("baer radical on classical examples") {
  CHECK(baer_radical(corpus::by_name("S3")).size() == 3);
  CHECK(baer_radical(corpus::by_name("S4")).size() == 4);  // Klein four subgroup
  CHECK(baer_radical(corpus::by_name("A5")).size() == 1);
  CHECK(baer_radical(corpus::by_name("D8")).size() == 16);  // nilpotent: whole group
  CHECK(fitting_oracle(corpus::by_name("S3")).size() == 3);
  CHECK(fitting_oracle(corpus::by_name("A5")).size() == 1);
}

TEST_CASE("class c kills left-normed commutators of weight c+1") {
  std::mt19937_64 rng(0xC1A55);
  for (const char* name : {"Q8", "D16", "Heis3", "D32", "C2^7"}) {
    const FiniteGroup& G = corpus::by_name(name);
    auto cls = nilpotency_class(whole_group(G));
    REQUIRE(cls.has_value());
    const int c = *cls;
    std::uniform_int_distribution<int> d(0, G.order() - 1);
    for (int k = 0; k < 10000; ++k) {
      int e = d(rng);
      for (int i = 0; i < c; ++i) e = G.comm(e, d(rng));
      CHECK(e == 0);
    }
  }
}

TEST_CASE("radicals agree, are normal and nilpotent (sample)") {
  for (const char* name : {"S3", "S4", "A4", "A5", "F20", "D6", "Dic3", "Heis3"}) {
    const FiniteGroup& G = corpus::by_name(name);
    Subgroup b = baer_radical(G);
    Subgroup f = fitting_oracle(G);
    CHECK(b.members == f.members);
    CHECK(is_normal(b));
    CHECK(nilpotency_class(b).has_value());
  }
}
