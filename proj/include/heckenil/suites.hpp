#pragma once

#include "heckenil/partitions.hpp"
#include "heckenil/sweep.hpp"

namespace heckenil {

struct SuiteOptions {
  int64_t kmax = 0;      // 0: suite default
  int64_t n_max = 0;     // coefficient spot-check range
  int64_t precision = 0; // series identity window
  int workers = 1;
  uint64_t seed = 12345;
  std::optional<uint32_t> p;
  std::vector<uint32_t> ells;
  std::string case_name;  // prop1_5 case filter: 1a|1b|1c|1d|2
  std::vector<int> ms;    // prop1_5 m list
};

struct SuiteResult {
  bool conjecture_only = false;  // mismatches are warnings, not failures
  std::vector<CongruenceReport> reports;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }
  int exit_code() const { return (conjecture_only || pass()) ? 0 : 1; }
  json to_json() const;
};

// Suite names: thm1_3, table2, conj1_7, mod7, mod3_level4, prop1_5,
// thm1_6, thm1_8, basis, crossover.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

// Individual suites (used by run_suite and by the acceptance harness).
std::vector<CongruenceReport> suite_thm13(const SuiteOptions& opt);
std::vector<CongruenceReport> suite_prop15(const SuiteOptions& opt);
std::vector<CongruenceReport> suite_thm16(const SuiteOptions& opt);
std::vector<CongruenceReport> suite_thm18(const SuiteOptions& opt);
std::vector<CongruenceReport> suite_basis(const SuiteOptions& opt);

// Theorem 3.1 span mapping: D2^k | T'_ell lands in W_1 or W_5 according to
// k*ell mod 6, solved exactly against the explicit spanning sets.
CongruenceReport verify_w_mapping(int64_t kmax, const std::vector<uint32_t>& ells);

}  // namespace heckenil
