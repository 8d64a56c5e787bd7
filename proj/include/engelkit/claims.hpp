#pragma once

#include <map>
#include <string>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit {

struct Claim {
  std::string id;         // CHK-01 .. CHK-19, stable across releases
  std::string kind;       // theorem|lemma|corollary|proposition|remark|cited-fact|informational
  std::string statement;  // what is checked
};

const std::vector<Claim>& claim_registry();
const Claim& claim_by_id(const std::string& id);  // throws UnknownNameError

enum class ClaimStatus { kPass, kFail, kInfo };

struct ClaimResult {
  std::string claim;
  std::string group;
  ClaimStatus status = ClaimStatus::kPass;
  // key -> value; failures always carry a witness naming concrete elements
  // as words in the group's generators.
  std::map<std::string, std::string> witness;
  long long ms = 0;
};

// Deterministic: quantifiers run exhaustively; pair/triple loops switch to a
// fixed-seed sample above order 256 and record the cap in the witness.
ClaimResult run_claim(const std::string& claim_id, const FiniteGroup& G);

struct RunOptions {
  std::vector<std::string> groups;  // empty = whole default corpus
  std::vector<std::string> claims;  // empty = all claims
  int jobs = 1;
};

// Results sorted by (claim id, group name).
std::vector<ClaimResult> run_all(const RunOptions& options);

std::string report_text(const std::vector<ClaimResult>& results);
// Stable bytes: the ms field is zeroed in JSON reports so consecutive runs
// compare equal.
std::string report_json(const std::vector<ClaimResult>& results);

// 0 = no failures, 1 = at least one failure (info never affects the code).
int report_exit_code(const std::vector<ClaimResult>& results);

}  // namespace engelkit
