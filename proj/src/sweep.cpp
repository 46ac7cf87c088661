#include "heckenil/sweep.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace heckenil {

std::vector<int64_t> parse_k_range(const std::string& text) {
  std::vector<int64_t> ks;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    auto dots = piece.find("..");
    if (dots == std::string::npos) {
      ks.push_back(std::stoll(piece));
    } else {
      int64_t lo = std::stoll(piece.substr(0, dots));
      int64_t hi = std::stoll(piece.substr(dots + 2));
      for (int64_t k = lo; k <= hi; ++k) ks.push_back(k);
    }
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::optional<int64_t> index_bound(uint32_t p, uint32_t ell, int64_t k, BasisKind space) {
  if (space == BasisKind::DeltaBasis && p == 2)
    return (k % 2 == 1) ? std::optional<int64_t>(ns_formula(k)) : std::nullopt;
  try {
    return thm13_bound(p, ell, k, space, false);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string index_rows_csv(const std::vector<IndexRow>& rows) {
  std::ostringstream out;
  out << "p,ell,space,k,index,bound,slack_observed\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.ell << ',' << basis_name(BasisTag{r.space, r.p}) << ',' << r.k << ','
        << r.index << ',';
    if (r.bound) out << *r.bound;
    out << ',';
    if (r.slack_observed) out << *r.slack_observed;
    out << '\n';
  }
  return out.str();
}

std::vector<IndexRow> parse_index_csv(const std::string& body) {
  std::vector<IndexRow> rows;
  std::stringstream ss(body);
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (header) {
      if (line != "p,ell,space,k,index,bound,slack_observed")
        throw std::invalid_argument("parse_index_csv: unexpected header");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 7) fields.push_back("");
    IndexRow r;
    r.p = static_cast<uint32_t>(std::stoul(fields[0]));
    r.ell = static_cast<uint32_t>(std::stoul(fields[1]));
    auto tag = basis_from_name(fields[2], r.p);
    if (!tag) throw std::invalid_argument("parse_index_csv: unknown space");
    r.space = tag->kind;
    r.k = std::stoll(fields[3]);
    r.index = std::stoll(fields[4]);
    if (!fields[5].empty()) r.bound = std::stoll(fields[5]);
    if (!fields[6].empty()) r.slack_observed = std::stoll(fields[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

json index_row_json(const IndexRow& row, bool with_trajectory) {
  json j;
  j["p"] = row.p;
  j["ell"] = row.ell;
  j["space"] = basis_name(BasisTag{row.space, row.p});
  j["k"] = row.k;
  j["index"] = row.index;
  j["bound"] = row.bound ? json(*row.bound) : json();
  j["slack_observed"] = row.slack_observed ? json(*row.slack_observed) : json();
  if (with_trajectory) {
    json traj = json::array();
    for (const auto& d : row.trajectory) traj.push_back(degree_to_json(d));
    j["trajectory"] = traj;
  }
  return j;
}

std::string ResultCache::key(uint32_t p, uint32_t ell, BasisKind space, int64_t k, int64_t slack,
                             bool modified) {
  std::ostringstream s;
  s << p << '|' << ell << '|' << basis_name(BasisTag{space, p}) << '|' << k << '|' << slack << '|'
    << modified;
  return s.str();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("v") || j["v"] != 1) continue;
    IndexRow r;
    r.p = j["p"].get<uint32_t>();
    r.ell = j["ell"].get<uint32_t>();
    auto tag = basis_from_name(j["space"].get<std::string>(), r.p);
    if (!tag) continue;
    r.space = tag->kind;
    r.k = j["k"].get<int64_t>();
    r.index = j["index"].get<int64_t>();
    if (j.contains("bound") && !j["bound"].is_null()) r.bound = j["bound"].get<int64_t>();
    if (j.contains("slack_observed") && !j["slack_observed"].is_null())
      r.slack_observed = j["slack_observed"].get<int64_t>();
    if (j.contains("trajectory"))
      for (const auto& d : j["trajectory"]) r.trajectory.push_back(degree_from_json(d));
    records_[key(r.p, r.ell, r.space, r.k, j.value("slack", int64_t(16)),
                 j.value("modified", true))] = std::move(r);
  }
}

std::optional<IndexRow> ResultCache::lookup(uint32_t p, uint32_t ell, BasisKind space, int64_t k,
                                            int64_t slack, bool modified) const {
  auto it = records_.find(key(p, ell, space, k, slack, modified));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::append(const IndexRow& row, int64_t slack, bool modified) {
  json j = index_row_json(row, true);
  j["v"] = 1;
  j["slack"] = slack;
  j["modified"] = modified;
  std::string line = j.dump() + "\n";
  int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cache: cannot open " + path_);
  ::flock(fd, LOCK_EX);
  ssize_t ignored = ::write(fd, line.data(), line.size());
  (void)ignored;
  ::flock(fd, LOCK_UN);
  ::close(fd);
  records_[key(row.p, row.ell, row.space, row.k, slack, modified)] = row;
}

std::vector<IndexRow> run_index_sweep(const RunConfig& cfg) {
  if (cfg.p < 2) throw std::invalid_argument("index sweep: p not set");
  if (cfg.ells.empty()) throw std::invalid_argument("index sweep: no ell given");

  std::unique_ptr<ResultCache> cache;
  if (!cfg.cache_path.empty()) cache = std::make_unique<ResultCache>(cfg.cache_path);

  std::vector<int64_t> ks;
  for (int64_t k : cfg.ks) {
    if (k < 1) continue;
    if (cfg.space == BasisKind::D2Span && (k % 2 == 0 || k % 3 == 0)) continue;
    ks.push_back(k);
  }

  std::vector<IndexRow> rows;
  std::mutex mu;
  for (uint32_t ell : cfg.ells) {
    NilSpec spec{cfg.p, ell, cfg.space, cfg.modified, cfg.slack, 0};
    // validate before any heavy work so bad configs die with a clear message
    if (!ks.empty()) initial_vector(cfg.space, ks.back());
    int64_t dmax = 0;
    std::vector<int64_t> missing;
    for (int64_t k : ks) {
      if (cache && cache->lookup(cfg.p, ell, cfg.space, k, cfg.slack, cfg.modified)) continue;
      missing.push_back(k);
      dmax = std::max(dmax, cfg.space == BasisKind::FBasis ? 3 * k : k);
    }
    std::shared_ptr<const HeckeMatrix> M;
    if (!missing.empty())
      M = ensure_hecke_matrix(BasisTag{cfg.space, cfg.p}, ell, cfg.modified, dmax, cfg.slack);
    std::vector<IndexRow> fresh(missing.size());
    parallel_for(0, static_cast<int64_t>(missing.size()), cfg.workers, [&](int64_t t) {
      int64_t k = missing[static_cast<size_t>(t)];
      NilpotencyReport rep = nilpotency_index(k, spec, *M);
      IndexRow row;
      row.p = cfg.p;
      row.ell = ell;
      row.space = cfg.space;
      row.k = k;
      row.index = rep.index;
      row.bound = index_bound(cfg.p, ell, k, cfg.space);
      if (row.bound) row.slack_observed = *row.bound - rep.index;
      row.trajectory = std::move(rep.degree_trajectory);
      fresh[static_cast<size_t>(t)] = std::move(row);
    });
    {
      std::lock_guard<std::mutex> lock(mu);
      for (auto& row : fresh) {
        if (cache) cache->append(row, cfg.slack, cfg.modified);
        rows.push_back(std::move(row));
      }
      if (cache)
        for (int64_t k : ks)
          if (auto hit = cache->lookup(cfg.p, ell, cfg.space, k, cfg.slack, cfg.modified)) {
            bool already = false;
            for (auto& r : rows)
              if (r.ell == ell && r.k == k) already = true;
            if (!already) rows.push_back(*hit);
          }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const IndexRow& a, const IndexRow& b) {
    return std::tie(a.ell, a.k) < std::tie(b.ell, b.k);
  });
  return rows;
}

}  // namespace heckenil
