#include "heckenil/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace heckenil {

BasisTag delta_basis(uint32_t p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("delta_basis: F_p[Delta] requires p in {2,3,5,7}");
  return BasisTag{BasisKind::DeltaBasis, p};
}

const char* basis_name(const BasisTag& tag) {
  switch (tag.kind) {
    case BasisKind::DeltaBasis: return "delta";
    case BasisKind::FBasis: return "f";
    case BasisKind::D2Span: return "d2";
  }
  return "?";
}

std::optional<BasisTag> basis_from_name(const std::string& name, uint32_t p) {
  if (name == "delta") return delta_basis(p);
  if (name == "f" && p == 3) return f_basis();
  if (name == "d2" && p == 3) return d2_span();
  return std::nullopt;
}

bool span_exponent(const BasisTag& tag, int64_t n) {
  if (tag.kind == BasisKind::D2Span) return n % 2 != 0 && n % 3 != 0;
  return n >= 0;
}

int64_t basis_weight(const BasisTag& tag, int64_t n) {
  switch (tag.kind) {
    case BasisKind::DeltaBasis: return 12 * n;
    case BasisKind::FBasis: return 2 * n;
    case BasisKind::D2Span: return 6 * n;
  }
  return 0;
}

namespace {

DegreeValue coeff_degree(const std::vector<uint32_t>& coeffs) {
  for (int64_t n = static_cast<int64_t>(coeffs.size()) - 1; n >= 0; --n)
    if (coeffs[static_cast<size_t>(n)]) return DegreeValue::of(n);
  return DegreeValue::neg_inf();
}

QSeries basis_generator(const BasisTag& tag, int64_t N) {
  switch (tag.kind) {
    case BasisKind::DeltaBasis: return delta_series(tag.p, N);
    case BasisKind::FBasis: return named_form(FormTag::FForm, 3, N);
    case BasisKind::D2Span: return named_form(d_delta(2), 3, N);
  }
  throw std::logic_error("basis_generator");
}

}  // namespace

PolyRep make_poly(const BasisTag& tag, std::vector<uint32_t> coeffs) {
  for (auto& x : coeffs) x %= tag.p;
  PolyRep P{tag, std::move(coeffs), DegreeValue::neg_inf()};
  P.degree = coeff_degree(P.coeffs);
  if (tag.kind == BasisKind::D2Span)
    for (size_t n = 0; n < P.coeffs.size(); ++n)
      if (P.coeffs[n] && !span_exponent(tag, static_cast<int64_t>(n)))
        throw std::invalid_argument("make_poly: exponent outside the D2 span");
  return P;
}

PolyRep monomial(const BasisTag& tag, int64_t degree, uint32_t coeff) {
  std::vector<uint32_t> c(static_cast<size_t>(degree) + 1, 0u);
  c[static_cast<size_t>(degree)] = coeff;
  return make_poly(tag, std::move(c));
}

DegreeValue PolyRep::second_highest_degree() const {
  if (degree.is_neg_inf()) return DegreeValue::neg_inf();
  for (int64_t n = degree.value() - 1; n >= 0; --n)
    if (coeffs[static_cast<size_t>(n)]) return DegreeValue::of(n);
  return DegreeValue::neg_inf();
}

bool operator==(const PolyRep& a, const PolyRep& b) {
  if (!(a.basis == b.basis) || a.degree != b.degree) return false;
  size_t m = std::max(a.coeffs.size(), b.coeffs.size());
  for (size_t n = 0; n < m; ++n) {
    uint32_t x = n < a.coeffs.size() ? a.coeffs[n] : 0;
    uint32_t y = n < b.coeffs.size() ? b.coeffs[n] : 0;
    if (x != y) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Basis q-expansion cache

namespace {

struct CacheKey {
  BasisKind kind;
  uint32_t p;
  bool operator<(const CacheKey& o) const {
    return std::tie(kind, p) < std::tie(o.kind, o.p);
  }
};

using Rows = std::vector<std::vector<uint32_t>>;

struct CacheEntry {
  int64_t d = -1;
  int64_t N = 0;
  std::shared_ptr<const Rows> rows;
};

std::mutex g_basis_mutex;
std::map<CacheKey, CacheEntry> g_basis_cache;

std::shared_ptr<const Rows> basis_rows(const BasisTag& tag, int64_t d, int64_t N) {
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  CacheKey key{tag.kind, tag.p};
  auto& entry = g_basis_cache[key];
  if (entry.d >= d && entry.N >= N) return entry.rows;
  int64_t nd = std::max(d, entry.d > 0 ? 2 * entry.d : d);
  int64_t nN = std::max({N, entry.N, nd + 1});
  auto rows = std::make_shared<Rows>();
  rows->reserve(static_cast<size_t>(nd) + 1);
  QSeries base = basis_generator(tag, nN);
  QSeries cur = qs_one(tag.p, nN);
  rows->push_back(cur.c);
  for (int64_t i = 1; i <= nd; ++i) {
    cur = mul(cur, base);
    rows->push_back(cur.c);
  }
  entry = CacheEntry{nd, nN, rows};
  return entry.rows;
}

}  // namespace

const Rows& basis_q_matrix(const BasisTag& tag, int64_t d, int64_t N) {
  if (N < d + 1) throw std::invalid_argument("basis_q_matrix: N must exceed d");
  static std::mutex pin_mutex;
  static std::vector<std::shared_ptr<const Rows>> pinned;  // keep old snapshots alive
  auto rows = basis_rows(tag, d, N);
  {
    std::lock_guard<std::mutex> lock(pin_mutex);
    if (pinned.empty() || pinned.back() != rows) pinned.push_back(rows);
  }
  return *rows;
}

QSeries expand(const PolyRep& P, int64_t N) {
  const auto& tag = P.basis;
  int64_t d = P.degree.is_neg_inf() ? 0 : P.degree.value();
  const auto& rows = basis_q_matrix(tag, d, std::max(N, d + 1));
  QSeries r(tag.p, N);
  for (int64_t i = 0; i <= d && i < static_cast<int64_t>(P.coeffs.size()); ++i) {
    uint32_t a = P.coeffs[static_cast<size_t>(i)];
    if (!a) continue;
    const auto& row = rows[static_cast<size_t>(i)];
    for (int64_t n = 0; n < N; ++n)
      r.c[n] = (r.c[n] + a * row[static_cast<size_t>(n)]) % tag.p;
  }
  return r;
}

PolyRep to_poly(const QSeries& f, const BasisTag& tag, int64_t d, int64_t slack) {
  if (f.p != tag.p) throw std::invalid_argument("to_poly: modulus mismatch");
  if (slack < 0) throw std::invalid_argument("to_poly: negative slack");
  const int64_t m = d + slack;  // verified window is 0..m
  if (f.precision() < m + 1)
    throw std::invalid_argument("to_poly: need precision >= d + 1 + slack");
  const auto& rows = basis_q_matrix(tag, d, m + 1);
  const uint32_t p = tag.p;
  std::vector<uint32_t> residual(f.c.begin(), f.c.begin() + m + 1);
  std::vector<uint32_t> coeffs(static_cast<size_t>(d) + 1, 0u);
  for (int64_t n = 0; n <= d; ++n) {
    uint32_t x = residual[static_cast<size_t>(n)] % p;
    if (!span_exponent(tag, n)) {
      if (x) throw residual_error("to_poly: coefficient outside the span", n, x);
      continue;
    }
    coeffs[static_cast<size_t>(n)] = x;
    if (!x) continue;
    const uint32_t neg = p - x;
    const auto& row = rows[static_cast<size_t>(n)];
    uint32_t* __restrict dst = residual.data() + n;
    const uint32_t* __restrict src = row.data() + n;
    for (int64_t t = 0; t <= m - n; ++t) dst[t] += neg * src[t];
  }
  for (int64_t n = d + 1; n <= m; ++n) {
    uint32_t x = residual[static_cast<size_t>(n)] % p;
    if (x) throw residual_error("to_poly: nonzero residual past the degree bound", n, x);
  }
  return make_poly(tag, std::move(coeffs));
}

PolyRep hecke_on_poly(const PolyRep& P, uint32_t ell, bool modified, int64_t slack) {
  const BasisTag& tag = P.basis;
  const uint32_t p = tag.p;
  if (ell == p || !is_prime(ell)) throw std::invalid_argument("hecke_on_poly: bad ell");
  if (tag.kind != BasisKind::DeltaBasis && (ell == 2 || ell == 3))
    throw std::invalid_argument("hecke_on_poly: level-4 bases need ell >= 5");
  if (P.is_zero()) return P;
  const int64_t deg = P.degree.value();

  const bool pm1 = (ell % p == 1) || (ell % p == p - 1);
  uint32_t lambda;
  if (pm1) {
    // Basis weights are even, so ell^{k-1} = ell^{+-1} = ell mod p uniformly.
    lambda = ell % p;
  } else {
    int64_t nonzero = 0;
    for (uint32_t x : P.coeffs) nonzero += (x != 0);
    if (nonzero != 1)
      throw std::invalid_argument(
          "hecke_on_poly: ell != +-1 mod p needs a homogeneous representative");
    lambda = pow_weight_mod(ell, basis_weight(tag, deg) - 1, p);
  }
  if (modified && ell % p != 1 && ell % p != p - 1)
    throw std::invalid_argument("hecke_on_poly: modified operator requires ell = +-1 mod p");
  const bool subtract2 = modified && (ell % p == 1);

  const int64_t m = deg + slack;
  const int64_t Nin = static_cast<int64_t>(ell) * (m + 1);
  QSeries f = expand(P, Nin);
  QSeries img(p, m + 1);
  for (int64_t n = 0; n <= m; ++n) {
    uint32_t v = f.c[static_cast<size_t>(n * ell)];
    if (n % ell == 0) v = add_mod(v, mul_mod(lambda, f.c[static_cast<size_t>(n / ell)], p), p);
    if (subtract2) v = sub_mod(v, mul_mod(2 % p, f.c[static_cast<size_t>(n)], p), p);
    img.c[static_cast<size_t>(n)] = v;
  }
  return to_poly(img, tag, deg, slack);
}

// ---------------------------------------------------------------------------
// The f-basis of F_5[Delta]

PolyRep f_basis_element(int64_t i, int64_t j) {
  if (i < 0 || j < 0 || j > 4) throw std::invalid_argument("f_basis_element: bad index");
  static const std::vector<std::vector<uint32_t>> fj = {
      {1}, {0, 1, 4}, {0, 0, 1}, {0, 0, 0, 1, 2, 3}, {0, 0, 0, 0, 1, 1}};
  std::vector<uint32_t> c(static_cast<size_t>(5 * i) + fj[j].size(), 0u);
  for (size_t t = 0; t < fj[j].size(); ++t) c[static_cast<size_t>(5 * i) + t] = fj[j][t];
  return make_poly(delta_basis(5), std::move(c));
}

std::vector<std::pair<int64_t, uint32_t>> delta_power_in_f_basis(int64_t k) {
  if (k < 0) throw std::invalid_argument("delta_power_in_f_basis: k < 0");
  int64_t i = k / 5, j = k % 5;
  switch (j) {
    case 0: return {{5 * i, 1}};
    case 1: return {{5 * i + 1, 1}, {5 * i + 2, 1}};
    case 2: return {{5 * i + 2, 1}};
    case 3: return {{5 * i + 3, 1}, {5 * i + 4, 3}, {5 * (i + 1), 4}};
    // coefficient 4 on the last term: f_4 = D^4 + D^5 forces
    // D^{5i+4} = f_{5i+4} + 4 f_{5(i+1)}
    default: return {{5 * i + 4, 1}, {5 * (i + 1), 4}};
  }
}

QSeries rho_projection(const QSeries& f, int64_t i) {
  int64_t r = ((i % 6) + 6) % 6;
  QSeries out(f.p, f.precision());
  for (int64_t n = r; n < f.precision(); n += 6) out.c[n] = f.c[n];
  out.weight = f.weight;
  return out;
}

Level2Apparatus level2_apparatus(int64_t d, int64_t N) {
  Level2Apparatus ap;
  ap.A = named_form(FormTag::AForm, 3, N);
  ap.G = named_form(FormTag::GForm, 3, N);
  ap.delta = delta_series(3, N);
  QSeries g0 = sub(ap.A, mul(ap.A, ap.A));
  QSeries cur = g0;
  ap.g.push_back(cur);
  for (int64_t i = 1; i <= d; ++i) {
    cur = mul(cur, ap.A);
    ap.g.push_back(cur);
  }
  return ap;
}

std::optional<std::vector<uint32_t>> span_solve(const std::vector<QSeries>& basis,
                                                const QSeries& f, int64_t rows) {
  if (basis.empty()) return f.is_zero() ? std::make_optional(std::vector<uint32_t>{}) : std::nullopt;
  const uint32_t p = f.p;
  const size_t nc = basis.size();
  const size_t nr = static_cast<size_t>(rows);
  for (const auto& b : basis)
    if (b.precision() < rows || b.p != p)
      throw std::invalid_argument("span_solve: basis precision/modulus");
  if (f.precision() < rows) throw std::invalid_argument("span_solve: target precision");

  std::vector<std::vector<uint32_t>> M(nr, std::vector<uint32_t>(nc + 1, 0u));
  for (size_t r = 0; r < nr; ++r) {
    for (size_t c = 0; c < nc; ++c) M[r][c] = basis[c].c[r];
    M[r][nc] = f.c[r];
  }
  size_t row = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t sel = nr;
    for (size_t r = row; r < nr; ++r)
      if (M[r][col]) { sel = r; break; }
    if (sel == nr) continue;
    std::swap(M[row], M[sel]);
    uint32_t inv = inv_mod(M[row][col], p);
    for (auto& x : M[row]) x = mul_mod(x, inv, p);
    for (size_t r = 0; r < nr; ++r) {
      if (r == row || !M[r][col]) continue;
      uint32_t fct = M[r][col];
      for (size_t c = col; c <= nc; ++c)
        M[r][c] = sub_mod(M[r][c], mul_mod(fct, M[row][c], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < nr; ++r)
    if (M[r][nc]) return std::nullopt;  // inconsistent: f is outside the span
  std::vector<uint32_t> x(nc, 0u);
  for (size_t r = 0; r < row; ++r) x[pivot_col[r]] = M[r][nc];
  // Recombine and verify every row of the window.
  for (size_t r = 0; r < nr; ++r) {
    uint64_t acc = 0;
    for (size_t c = 0; c < nc; ++c) acc += static_cast<uint64_t>(x[c]) * basis[c].c[r];
    if (acc % p != f.c[r]) return std::nullopt;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Operator matrices

DegreeValue HeckeMatrix::column_degree(int64_t i) const {
  if (i < 0 || i > max_degree) throw std::out_of_range("HeckeMatrix: column index");
  const auto& col = cols[static_cast<size_t>(i)];
  return col.empty() ? DegreeValue::neg_inf() : DegreeValue::of(static_cast<int64_t>(col.size()) - 1);
}

std::vector<uint8_t> HeckeMatrix::apply(const std::vector<uint8_t>& v) const {
  const uint32_t p = basis.p;
  if (static_cast<int64_t>(v.size()) > max_degree + 1)
    throw std::invalid_argument("HeckeMatrix::apply: vector exceeds matrix degree");
  std::vector<uint32_t> acc(v.size(), 0u);
  size_t top = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const uint32_t a = v[i];
    if (!a) continue;
    const auto& col = cols[i];
    if (col.empty()) continue;
    top = std::max(top, col.size());
    uint32_t* __restrict dst = acc.data();
    const uint8_t* __restrict src = col.data();
    for (size_t t = 0; t < col.size(); ++t) dst[t] += a * src[t];
  }
  size_t deg1 = 0;
  for (size_t t = 0; t < top; ++t) {
    acc[t] %= p;
    if (acc[t]) deg1 = t + 1;
  }
  std::vector<uint8_t> out(deg1);
  for (size_t t = 0; t < deg1; ++t) out[t] = static_cast<uint8_t>(acc[t]);
  return out;
}

DegreeValue HeckeMatrix::degree_of(const std::vector<uint8_t>& v) const {
  for (int64_t n = static_cast<int64_t>(v.size()) - 1; n >= 0; --n)
    if (v[static_cast<size_t>(n)]) return DegreeValue::of(n);
  return DegreeValue::neg_inf();
}

namespace {

// Solve one image against the stored unitriangular row prefixes, verifying
// `slack` coefficients past the degree bound.
std::vector<uint8_t> solve_column(const BasisTag& tag, const std::vector<uint32_t>& image,
                                  int64_t bound, int64_t slack,
                                  const std::vector<std::vector<uint32_t>>& rows,
                                  uint32_t ell) {
  const uint32_t p = tag.p;
  const int64_t m = bound + slack;
  std::vector<uint32_t> residual(image.begin(), image.begin() + m + 1);
  std::vector<uint8_t> col(static_cast<size_t>(bound) + 1, 0u);
  for (int64_t n = 0; n <= bound; ++n) {
    uint32_t x = residual[static_cast<size_t>(n)] % p;
    if (!span_exponent(tag, n)) {
      if (x)
        throw residual_error("hecke matrix: image left the span (ell=" + std::to_string(ell) +
                                 ", degree " + std::to_string(bound) + ")",
                             n, x);
      continue;
    }
    col[static_cast<size_t>(n)] = static_cast<uint8_t>(x);
    if (!x) continue;
    const uint32_t neg = p - x;
    const auto& row = rows[static_cast<size_t>(n)];
    uint32_t* __restrict dst = residual.data() + n;
    const uint32_t* __restrict src = row.data() + n;
    const int64_t len = m - n + 1;
    for (int64_t t = 0; t < len; ++t) dst[t] += neg * src[t];
  }
  for (int64_t n = bound + 1; n <= m; ++n) {
    uint32_t x = residual[static_cast<size_t>(n)] % p;
    if (x)
      throw residual_error("hecke matrix: nonzero residual past the degree bound (ell=" +
                               std::to_string(ell) + ")",
                           n, x);
  }
  while (!col.empty() && col.back() == 0) col.pop_back();
  return col;
}

// Emit the column for basis element of degree i from its full q-expansion.
std::vector<uint32_t> image_window(const std::vector<uint32_t>& cur, int64_t i, int64_t slack,
                                   uint32_t ell, uint32_t lambda, bool subtract2, uint32_t p) {
  const int64_t m = i + slack;
  std::vector<uint32_t> img(static_cast<size_t>(m) + 1, 0u);
  for (int64_t n = 0; n <= m; ++n) {
    uint32_t v = cur[static_cast<size_t>(n * ell)];
    if (n % ell == 0) v = add_mod(v, mul_mod(lambda, cur[static_cast<size_t>(n / ell)], p), p);
    if (subtract2) v = sub_mod(v, mul_mod(2 % p, cur[static_cast<size_t>(n)], p), p);
    img[static_cast<size_t>(n)] = v;
  }
  return img;
}

int64_t frobenius_block(uint32_t p) {
  switch (p) {
    case 2: return 32;
    case 3: return 27;
    case 5: return 25;
    case 7: return 49;
  }
  return 0;
}

}  // namespace

HeckeMatrix build_hecke_matrix(const BasisTag& tag, uint32_t ell, bool modified, int64_t d,
                               int64_t slack) {
  const uint32_t p = tag.p;
  if (!is_prime(ell) || ell == p) throw std::invalid_argument("build_hecke_matrix: bad ell");
  if (tag.kind == BasisKind::DeltaBasis) {
    if (ell % p != 1 && ell % p != p - 1)
      throw std::invalid_argument("build_hecke_matrix: need ell = +-1 mod p on F_p[Delta]");
  } else {
    if (ell == 2 || ell == 3)
      throw std::invalid_argument("build_hecke_matrix: level-4 bases need ell >= 5");
  }
  if (d < 0 || slack < 1) throw std::invalid_argument("build_hecke_matrix: bad sizes");

  HeckeMatrix M;
  M.basis = tag;
  M.ell = ell;
  M.modified = modified;
  M.slack = slack;
  M.max_degree = d;
  M.cols.assign(static_cast<size_t>(d) + 1, {});

  const uint32_t lambda = ell % p;  // ell^{k-1} for the even weights of the basis
  const bool subtract2 = modified && (ell % p == 1);
  const int64_t row_len = d + slack + 1;
  auto length_for = [&](int64_t i) {
    return std::max<int64_t>(static_cast<int64_t>(ell) * (i + slack) + 1, row_len);
  };

  std::vector<std::vector<uint32_t>> rows(static_cast<size_t>(d) + 1);

  if (tag.kind == BasisKind::D2Span) {
    // Exponents coprime to 6, walked with precomputed D2^2 and D2^4.
    const int64_t L = length_for(d);
    QSeries d2 = named_form(d_delta(2), 3, L);
    QSeries d2_2 = mul(d2, d2);
    QSeries d2_4 = mul(d2_2, d2_2);
    QSeries cur = d2;
    int64_t k = 1;
    while (k <= d) {
      // walk invariant: cur = D2^k
      rows[static_cast<size_t>(k)].assign(cur.c.begin(), cur.c.begin() + row_len);
      auto img = image_window(cur.c, k, slack, ell, lambda, subtract2, p);
      M.cols[static_cast<size_t>(k)] = solve_column(tag, img, k, slack, rows, ell);
      const int64_t step = (k % 6 == 1) ? 4 : 2;
      k += step;
      if (k <= d) cur = mul(cur, step == 4 ? d2_4 : d2_2);
    }
    return M;
  }

  // Step-one bases (Delta powers, F powers): blocks anchored at Frobenius
  // multiples so the running product never carries more length than the
  // current block needs.
  const int64_t blocksz = frobenius_block(p);
  const int64_t nblocks = d / blocksz + 1;
  const int64_t Lmax = length_for(d);

  QSeries gen = basis_generator(tag, Lmax);

  std::vector<std::vector<uint32_t>> anchors;  // gen^b to length ceil(Lmax/blocksz)+1
  if (nblocks > 1) {
    const int64_t sLen = (Lmax - 1) / blocksz + 2;
    QSeries small = qs_one(p, sLen);
    QSeries gen_small = truncate(gen, sLen);
    anchors.push_back(small.c);
    for (int64_t b = 1; b < nblocks; ++b) {
      small = mul(small, gen_small);
      anchors.push_back(small.c);
    }
  }

  for (int64_t b = 0; b < nblocks; ++b) {
    const int64_t i0 = b * blocksz;
    if (i0 > d) break;
    const int64_t end = std::min(d, i0 + blocksz - 1);
    const int64_t Lb = length_for(end);
    QSeries cur(p, Lb);
    if (b == 0) {
      cur.c[0] = 1 % p;
    } else {
      // gen^{i0} = (gen^b)(q^{blocksz}) in characteristic p
      for (int64_t j = 0; j * blocksz < Lb; ++j)
        cur.c[static_cast<size_t>(j * blocksz)] = anchors[static_cast<size_t>(b)][static_cast<size_t>(j)];
    }
    for (int64_t i = i0; i <= end; ++i) {
      if (i > i0) cur = mul(cur, gen);
      rows[static_cast<size_t>(i)].assign(cur.c.begin(), cur.c.begin() + row_len);
      auto img = image_window(cur.c, i, slack, ell, lambda, subtract2, p);
      M.cols[static_cast<size_t>(i)] = solve_column(tag, img, i, slack, rows, ell);
    }
  }
  return M;
}

namespace {
struct MatrixKey {
  BasisKind kind;
  uint32_t p, ell;
  bool modified;
  int64_t slack;
  bool operator<(const MatrixKey& o) const {
    return std::tie(kind, p, ell, modified, slack) <
           std::tie(o.kind, o.p, o.ell, o.modified, o.slack);
  }
};
std::mutex g_matrix_mutex;
std::map<MatrixKey, std::shared_ptr<const HeckeMatrix>> g_matrix_cache;
}  // namespace

std::shared_ptr<const HeckeMatrix> ensure_hecke_matrix(const BasisTag& tag, uint32_t ell,
                                                       bool modified, int64_t d, int64_t slack) {
  MatrixKey key{tag.kind, tag.p, ell, modified, slack};
  std::lock_guard<std::mutex> lock(g_matrix_mutex);
  auto it = g_matrix_cache.find(key);
  if (it != g_matrix_cache.end() && it->second->max_degree >= d) return it->second;
  int64_t nd = d;
  if (it != g_matrix_cache.end()) nd = std::max(d, it->second->max_degree * 3 / 2);
  auto built = std::make_shared<HeckeMatrix>(build_hecke_matrix(tag, ell, modified, nd, slack));
  g_matrix_cache[key] = built;
  return built;
}

std::vector<uint32_t> d2_power_in_f_basis(int64_t k) {
  if (k < 0) throw std::invalid_argument("d2_power_in_f_basis: k < 0");
  // (x - x^3)^k over F_3 by binary powering on dense coefficient arrays.
  auto mul3 = [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0u);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
    }
    return r;
  };
  std::vector<uint32_t> result{1};
  std::vector<uint32_t> base{0, 1, 0, 2};  // x - x^3 = x + 2x^3 mod 3
  int64_t e = k;
  while (e) {
    if (e & 1) result = mul3(result, base);
    e >>= 1;
    if (e) base = mul3(base, base);
  }
  return result;
}

}  // namespace heckenil
