#include <doctest.h>

#include <json.hpp>

#include "engelkit/claims.hpp"
#include "engelkit/corpus.hpp"
#include "engelkit/errors.hpp"

using namespace engelkit;

TEST_CASE("registry is stable and complete") {
  const auto& reg = claim_registry();
  REQUIRE(reg.size() == 19);
  CHECK(reg.front().id == "CHK-01");
  CHECK(reg.back().id == "CHK-19");
  for (size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  CHECK(claim_by_id("CHK-10").kind == "corollary");
  CHECK_THROWS_AS(claim_by_id("CHK-99"), UnknownNameError);
}

TEST_CASE("abelian groups pass the characterization claims trivially") {
  ClaimResult r = run_claim("CHK-02", corpus::by_name("C12"));
  CHECK(r.status == ClaimStatus::kPass);
  CHECK(r.witness.at("size") == "12");
}

TEST_CASE("every claim passes on a pair of small groups") {
  for (const char* name : {"S3", "Q8"}) {
    const FiniteGroup& G = corpus::by_name(name);
    for (const auto& c : claim_registry()) {
      ClaimResult r = run_claim(c.id, G);
      CAPTURE(c.id);
      CAPTURE(name);
      CHECK(r.status != ClaimStatus::kFail);
    }
  }
}

TEST_CASE("CHK-13 on the order-16 dihedral group lists its witnesses") {
  ClaimResult r = run_claim("CHK-13", corpus::by_name("D8"));
  REQUIRE(r.status == ClaimStatus::kPass);
  CHECK(r.witness.at("checked") == "15");  // every non-identity element has 2-power order
  CHECK(r.witness.at("max_derived_length") == "1");
  CHECK(r.witness.count("x01") == 1);  // per-element listing
}

TEST_CASE("empty result sets are well-formed") {
  std::vector<ClaimResult> none;
  CHECK(report_exit_code(none) == 0);
  CHECK(nlohmann::json::parse(report_json(none)).empty());
  CHECK(report_text(none).find("passed 0, failed 0, info 0") != std::string::npos);
}

TEST_CASE("informational claims never fail") {
  for (const char* name : {"S4", "D6"}) {
    CHECK(run_claim("CHK-18", corpus::by_name(name)).status == ClaimStatus::kInfo);
    CHECK(run_claim("CHK-19", corpus::by_name(name)).status == ClaimStatus::kInfo);
  }
}

TEST_CASE("lemma and theorem claims on S4") {
  const FiniteGroup& G = corpus::by_name("S4");
  for (const char* id : {"CHK-09", "CHK-13", "CHK-15", "CHK-16", "CHK-17"}) {
    ClaimResult r = run_claim(id, G);
    CAPTURE(id);
    CHECK(r.status == ClaimStatus::kPass);
  }
  // exhaustive pair loops at this size
  CHECK(run_claim("CHK-17", G).witness.at("pairs") == "exhaustive");
}

TEST_CASE("run_all selection and ordering") {
  RunOptions opt;
  opt.groups = {"S3", "C4"};
  opt.claims = {"CHK-02", "CHK-01"};
  auto results = run_all(opt);
  REQUIRE(results.size() == 4);
  CHECK(results[0].claim == "CHK-01");
  CHECK(results[0].group == "C4");
  CHECK(results[1].group == "S3");
  CHECK(results[2].claim == "CHK-02");
  CHECK(report_exit_code(results) == 0);

  RunOptions empty;
  empty.groups = {"S3"};
  empty.claims = {"CHK-05"};
  CHECK(run_all(empty).size() == 1);

  RunOptions bad;
  bad.groups = {"NoSuchGroup"};
  CHECK_THROWS_AS(run_all(bad), UnknownNameError);
}

TEST_CASE("claims hold on a loaded non-corpus group") {
  // order 21: the smallest non-abelian group of odd order
  FiniteGroup G = FiniteGroup::close(
      parse_generator_file("a = (1 2 3 4 5 6 7)\nb = (2 3 5)(4 7 6)\n"), 25, "C7:C3");
  REQUIRE(G.order() == 21);
  for (const auto& c : claim_registry()) {
    ClaimResult r = run_claim(c.id, G);
    CAPTURE(c.id);
    CHECK(r.status != ClaimStatus::kFail);
  }
  // the normal C7 is left 2-Engel, the order-3 elements are not Engel at all
  CHECK(run_claim("CHK-02", G).witness.at("size") == "7");
}

TEST_CASE("parallel execution gives identical results") {
  RunOptions seq;
  seq.groups = {"S3", "S4", "Q8", "D6"};
  seq.claims = {"CHK-02", "CHK-09", "CHK-17"};
  seq.jobs = 1;
  RunOptions par = seq;
  par.jobs = 4;
  auto a = run_all(seq);
  auto b = run_all(par);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim == b[i].claim);
    CHECK(a[i].group == b[i].group);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].witness == b[i].witness);
  }
}

TEST_CASE("json report shape and stability") {
  RunOptions opt;
  opt.groups = {"S3"};
  opt.claims = {"CHK-02", "CHK-18"};
  auto results = run_all(opt);
  std::string j1 = report_json(results);
  std::string j2 = report_json(run_all(opt));
  CHECK(j1 == j2);

  auto parsed = nlohmann::json::parse(j1);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  for (const auto& item : parsed) {
    CHECK(item.contains("claim"));
    CHECK(item.contains("group"));
    CHECK(item.contains("status"));
    CHECK(item.contains("witness"));
    CHECK(item.contains("ms"));
    CHECK(item["ms"] == 0);
  }
  CHECK(parsed[0]["status"] == "pass");
  CHECK(parsed[1]["status"] == "info");
}

TEST_CASE("exit code reflects failures") {
  std::vector<ClaimResult> fake(2);
  fake[0].claim = "CHK-01";
  fake[0].group = "X";
  fake[0].status = ClaimStatus::kPass;
  fake[1].claim = "CHK-02";
  fake[1].group = "X";
  fake[1].status = ClaimStatus::kFail;
  fake[1].witness["x"] = "r";
  CHECK(report_exit_code(fake) == 1);
  CHECK(report_text(fake).find("failed 1") != std::string::npos);
  auto j = nlohmann::json::parse(report_json(fake));
  CHECK(j[1]["witness"]["x"] == "r");
}
