#pragma once

#include "heckenil/nilpotency.hpp"

namespace heckenil {

struct RunConfig {
  uint32_t p = 0;
  std::vector<uint32_t> ells;
  std::vector<int64_t> ks;
  BasisKind space = BasisKind::DeltaBasis;
  bool modified = true;
  int64_t slack = 16;
  int64_t precision = 0;  // override for truncated checks
  std::string format = "csv";
  std::string cache_path;
  int workers = 1;
  uint64_t seed = 0;
};

// "1..100" or "1,5,7" (mixed: "1..4,10").
std::vector<int64_t> parse_k_range(const std::string& text);

struct IndexRow {
  uint32_t p = 0;
  uint32_t ell = 0;
  BasisKind space = BasisKind::DeltaBasis;
  int64_t k = 0;
  int64_t index = 0;
  std::optional<int64_t> bound;
  std::optional<int64_t> slack_observed;
  std::vector<DegreeValue> trajectory;
};

// Fixed CSV schema: p,ell,space,k,index,bound,slack_observed.
std::string index_rows_csv(const std::vector<IndexRow>& rows);
std::vector<IndexRow> parse_index_csv(const std::string& body);
json index_row_json(const IndexRow& row, bool with_trajectory = true);

// Append-only JSON-lines result cache; one record per line, schema v:1,
// appended under an exclusive lock.  Re-runs reuse records whose
// (p, ell, space, k, slack, modified) match.
class ResultCache {
 public:
  explicit ResultCache(std::string path);
  std::optional<IndexRow> lookup(uint32_t p, uint32_t ell, BasisKind space, int64_t k,
                                 int64_t slack, bool modified) const;
  void append(const IndexRow& row, int64_t slack, bool modified);
  int64_t size() const { return static_cast<int64_t>(records_.size()); }

 private:
  std::string path_;
  std::map<std::string, IndexRow> records_;
  static std::string key(uint32_t p, uint32_t ell, BasisKind space, int64_t k, int64_t slack,
                         bool modified);
};

// Index sweep over cfg.ks x cfg.ells: cache-aware, work-stealing over k,
// deterministic output order (ell, then k).  The proven bound column uses
// thm13_bound where one exists and the base-2 digit formula for p = 2
// (odd k); otherwise the bound is empty.
std::vector<IndexRow> run_index_sweep(const RunConfig& cfg);

std::optional<int64_t> index_bound(uint32_t p, uint32_t ell, int64_t k, BasisKind space);

}  // namespace heckenil
