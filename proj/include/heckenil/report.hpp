#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "heckenil/basis.hpp"
#include "heckenil/degree_value.hpp"

namespace heckenil {

using json = nlohmann::json;

// Structured pass/fail evidence for one congruence-family or bound check.
// failures empty <=> pass.  ExactBasis marks statements verified as
// polynomial identities in a basis representation; Truncated marks
// q-expansion checks to finite precision only, never reported as proofs.
struct CongruenceReport {
  std::string family;
  json params = json::object();
  int64_t checked = 0;
  std::vector<json> failures;
  int64_t precision_used = 0;
  enum class Rigor { ExactBasis, Truncated, Arithmetic } rigor = Rigor::Arithmetic;
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }
  void fail(json witness) { failures.push_back(std::move(witness)); }
  json to_json() const;
};

// Result of one index-of-nilpotency computation; unit of the result cache.
struct NilpotencyReport {
  uint32_t p = 0;
  uint32_t ell = 0;
  BasisKind space = BasisKind::DeltaBasis;
  int64_t k = 0;
  int64_t index = 0;
  std::vector<DegreeValue> degree_trajectory;  // one entry per application, last is -inf

  json to_json() const;
};

json degree_to_json(const DegreeValue& d);
DegreeValue degree_from_json(const json& j);

std::string rigor_name(CongruenceReport::Rigor r);

}  // namespace heckenil
