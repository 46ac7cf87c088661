#include <CLI11.hpp>

#include <iostream>

#include "heckenil/suites.hpp"

using namespace heckenil;

namespace {

std::vector<uint32_t> parse_ells(const std::string& text) {
  std::vector<uint32_t> ells;
  for (int64_t v : parse_k_range(text)) ells.push_back(static_cast<uint32_t>(v));
  return ells;
}

int cmd_index(const RunConfig& cfg, const std::string& format) {
  std::vector<IndexRow> rows;
  try {
    rows = run_index_sweep(cfg);
  } catch (const residual_error& e) {
    std::cerr << "RESIDUAL_NONZERO: " << e.what() << "\n";
    return 2;
  }
  bool violated = false;
  for (const auto& r : rows)
    if (r.bound && r.index > *r.bound) violated = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(index_row_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << index_rows_csv(rows);
  }
  if (violated) {
    std::cerr << "BOUND_VIOLATED: some indices exceed the proven bound\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
  SuiteResult res;
  try {
    res = run_suite(suite, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (format == "json") {
    std::cout << res.to_json().dump(2) << "\n";
  } else {
    for (const auto& r : res.reports) {
      std::cout << (r.pass() ? "PASS " : (res.conjecture_only ? "WARN " : "FAIL ")) << r.family
                << " " << r.params.dump() << " checked=" << r.checked
                << " failures=" << r.failures.size() << "\n";
      for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
      for (size_t i = 0; i < r.failures.size() && i < 5; ++i)
        std::cout << "  witness: " << r.failures[i].dump() << "\n";
    }
  }
  return res.exit_code();
}

int cmd_partition(const std::string& kind, int64_t t, int64_t r, uint32_t mod, int64_t max_n,
                  bool exact, const std::string& format) {
  std::vector<std::pair<int64_t, int64_t>> values;
  if (kind == "tcore") {
    if (exact) {
      for (int64_t n = 0; n <= max_n; ++n) values.push_back({n, brute_force_tcore(t, n)});
    } else {
      QSeries a = tcore_series(t, mod, max_n + 1);
      for (int64_t n = 0; n <= max_n; ++n) values.push_back({n, a.at(n)});
    }
  } else if (kind == "power") {
    QSeries a = power_partition_series(r, max_n + 1, mod);
    for (int64_t n = 0; n <= max_n; ++n) values.push_back({n, a.at(n)});
  } else {
    std::cerr << "error: --kind must be tcore or power\n";
    return 2;
  }
  if (format == "json") {
    json arr = json::array();
    for (auto& [n, v] : values) arr.push_back({{"n", n}, {"value", v}});
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "n,value\n";
    for (auto& [n, v] : values) std::cout << n << ',' << v << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotency indices of Hecke operators on modular forms mod p"};
  app.require_subcommand(1);

  // index
  auto* index = app.add_subcommand("index", "index-of-nilpotency sweep over k");
  RunConfig cfg;
  std::string k_text, space_name = "delta", format = "csv";
  uint32_t p = 0;
  std::string ell_text;
  index->add_option("--p", p, "modulus")->required();
  index->add_option("--ell", ell_text, "operator prime(s), e.g. 19 or 5,7")->required();
  index->add_option("--k", k_text, "exponent range, e.g. 1..100 or 1,5,7")->required();
  index->add_option("--space", space_name, "delta | f | d2");
  index->add_option("--slack", cfg.slack, "residual verification window");
  index->add_option("--format", format, "csv | json");
  index->add_option("--cache", cfg.cache_path, "JSON-lines result cache path");
  index->add_option("--workers", cfg.workers, "worker threads");
  index->add_option("--precision", cfg.precision, "precision override");
  index->add_option("--seed", cfg.seed, "seed for randomized checks");
  index->add_flag("--plain", "apply T_ell instead of T'_ell")
      ->each([&](const std::string&) { cfg.modified = false; });

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  SuiteOptions opt;
  std::string suite, vformat = "text", vells, vms, vcase;
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--kmax", opt.kmax, "exponent range bound");
  verify->add_option("--n-max", opt.n_max, "coefficient spot-check range");
  verify->add_option("--precision", opt.precision, "series identity window");
  verify->add_option("--workers", opt.workers, "worker threads");
  verify->add_option("--seed", opt.seed, "seed for randomized checks");
  uint32_t vp = 0;
  verify->add_option("--p", vp, "restrict to one modulus");
  verify->add_option("--ell", vells, "restrict to these primes");
  verify->add_option("--case", vcase, "prop1_5 case: 1a|1b|1c|1d|2");
  verify->add_option("--m", vms, "prop1_5 exponent list, e.g. 1,3,5");
  verify->add_option("--format", vformat, "text | json");

  // partition
  auto* partition = app.add_subcommand("partition", "partition-function series");
  std::string kind = "tcore", pformat = "csv";
  int64_t t = 2, r = 1, max_n = 50;
  uint32_t mod = 3;
  bool exact = false;
  partition->add_option("--kind", kind, "tcore | power")->required();
  partition->add_option("--t", t, "t-core parameter");
  partition->add_option("--r", r, "power of the Euler product");
  partition->add_option("--mod", mod, "coefficient modulus");
  partition->add_option("--max-n", max_n, "largest index to print");
  partition->add_flag("--exact", exact, "exact small-n counts by enumeration");
  partition->add_option("--format", pformat, "csv | json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (index->parsed()) {
      cfg.p = p;
      cfg.ells = parse_ells(ell_text);
      cfg.ks = parse_k_range(k_text);
      auto tag = basis_from_name(space_name, p);
      if (!tag) {
        std::cerr << "error: unknown space '" << space_name << "' for p=" << p << "\n";
        return 2;
      }
      cfg.space = tag->kind;
      return cmd_index(cfg, format);
    }
    if (verify->parsed()) {
      if (vp) opt.p = vp;
      if (!vells.empty()) opt.ells = parse_ells(vells);
      if (!vms.empty())
        for (int64_t v : parse_k_range(vms)) opt.ms.push_back(static_cast<int>(v));
      opt.case_name = vcase;
      return cmd_verify(suite, opt, vformat);
    }
    if (partition->parsed()) return cmd_partition(kind, t, r, mod, max_n, exact, pformat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
