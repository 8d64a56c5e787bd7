#include <doctest.h>

#include "engelkit/corpus.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/subgroup.hpp"

using namespace engelkit;

TEST_CASE("degenerate Engel sets") {
  const FiniteGroup& G = corpus::by_name("S3");
  CHECK(left_engel_set(G, 0).members.count() == 1);
  CHECK(right_engel_set(G, 0).members.count() == 1);
  // L1 = R1 = centre
  CHECK(left_engel_set(G, 1).members.count() == 1);
  CHECK(right_engel_set(G, 1).members == center(G).members);
  const FiniteGroup& Q = corpus::by_name("Q8");
  CHECK(left_engel_set(Q, 1).members == center(Q).members);
  CHECK(right_engel_set(Q, 1).members == center(Q).members);
}

TEST_CASE("abelian groups are all-Engel") {
  const FiniteGroup& C = corpus::by_name("C12");
  for (int n = 1; n <= 3; ++n) {
    CHECK(left_engel_set(C, n).members.count() == 12);
    CHECK(right_engel_set(C, n).members.count() == 12);
  }
}

TEST_CASE("L3 of S3 is the rotation subgroup") {
  const FiniteGroup& G = corpus::by_name("S3");
  EngelSet l3 = left_engel_set(G, 3);
  CHECK(l3.members.count() == 3);
  Subgroup a3 = subgroup_generate(G, {G.generator_elements()[1]});
  CHECK(l3.members == a3.members);
  // R2(S3) is trivial
  CHECK(right_engel_set(G, 2).members.count() == 1);
}

TEST_CASE("membership tests agree with materialized sets") {
  for (const char* name : {"S3", "S4", "Q8", "D6"}) {
    const FiniteGroup& G = corpus::by_name(name);
    for (int n = 0; n <= 4; ++n) {
      EngelSet l = left_engel_set(G, n);
      EngelSet r = right_engel_set(G, n);
      for (int x = 0; x < G.order(); ++x) {
        CHECK(is_left_n_engel(G, x, n) == l.members.test(x));
        CHECK(is_right_n_engel(G, x, n) == r.members.test(x));
      }
    }
  }
  // a transposition in S3 is not even left 5-Engel
  const FiniteGroup& S3 = corpus::by_name("S3");
  CHECK_FALSE(is_left_n_engel(S3, S3.generator_elements()[0], 5));
}

TEST_CASE("monotonicity of left Engel sets over the whole corpus") {
  for (const auto& G : corpus::default_corpus()) {
    Bitset prev = left_engel_set(G, 0).members;
    for (int n = 1; n <= 5; ++n) {
      Bitset cur = left_engel_set(G, n).members;
      CHECK(prev.is_subset_of(cur));
      prev = cur;
    }
  }
}

TEST_CASE("nilpotent groups of class c are left c-Engel") {
  for (const char* name : {"Q8", "D8", "Heis3", "D16"}) {
    const FiniteGroup& G = corpus::by_name(name);
    auto cls = nilpotency_class(whole_group(G));
    REQUIRE(cls.has_value());
    CHECK(left_engel_set(G, *cls).members.count() == G.order());
  }
}

TEST_CASE("characterizations match brute force (sample)") {
  for (const char* name : {"S3", "S4", "A4", "D6", "Dic3", "Q8", "Heis3", "F20"}) {
    const FiniteGroup& G = corpus::by_name(name);
    CHECK(l2_characterization(G).members == left_engel_set(G, 2).members);
    CHECK(l3_characterization(G).members == left_engel_set(G, 3).members);
  }
}

TEST_CASE("central elements are in every characterization") {
  const FiniteGroup& Q = corpus::by_name("Q8");
  Bitset z = center(Q).members;
  Bitset l3 = l3_characterization(Q).members;
  CHECK(z.is_subset_of(l3));
}
