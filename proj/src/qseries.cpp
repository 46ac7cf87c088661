#include "heckenil/qseries.hpp"

#include <algorithm>
#include <cstring>

namespace heckenil {

namespace {

void require_same_modulus(const QSeries& a, const QSeries& b) {
  if (a.p != b.p) throw std::invalid_argument("QSeries: modulus mismatch");
  if (a.p < 2) throw std::invalid_argument("QSeries: modulus not set");
}

std::optional<int64_t> combined_weight(const QSeries& a, const QSeries& b) {
  if (a.weight && b.weight) return *a.weight + *b.weight;
  return std::nullopt;
}

void reduce_all(std::vector<uint32_t>& v, uint32_t p) {
  for (auto& x : v) x %= p;
}

}  // namespace

QSeries qs_constant(uint32_t p, int64_t N, int64_t value) {
  if (N < 1) throw std::invalid_argument("QSeries: precision must be >= 1");
  QSeries r(p, N);
  r.c[0] = reduce_mod(value, p);
  return r;
}

QSeries add(const QSeries& a, const QSeries& b) {
  require_same_modulus(a, b);
  int64_t N = std::min(a.precision(), b.precision());
  QSeries r(a.p, N);
  for (int64_t n = 0; n < N; ++n)
    r.c[n] = add_mod(a.c[n], b.c[n], a.p);
  r.weight = (a.weight && b.weight && *a.weight == *b.weight) ? a.weight : std::nullopt;
  return r;
}

QSeries sub(const QSeries& a, const QSeries& b) {
  require_same_modulus(a, b);
  int64_t N = std::min(a.precision(), b.precision());
  QSeries r(a.p, N);
  for (int64_t n = 0; n < N; ++n)
    r.c[n] = sub_mod(a.c[n], b.c[n], a.p);
  r.weight = (a.weight && b.weight && *a.weight == *b.weight) ? a.weight : std::nullopt;
  return r;
}

QSeries scale(const QSeries& a, int64_t s) {
  QSeries r = a;
  uint32_t f = reduce_mod(s, a.p);
  for (auto& x : r.c) x = mul_mod(x, f, a.p);
  return r;
}

void conv_acc(const uint32_t* a, int64_t na, const uint32_t* b, int64_t nb,
              uint32_t* out, int64_t n_out, uint32_t p) {
  // Accumulates without intermediate reduction; safe while
  // n_out * (p-1)^2 stays below 2^32, which holds for every modulus and
  // length this library uses (p <= 23, lengths < 10^6).  Guarded anyway.
  const uint64_t worst = static_cast<uint64_t>(p - 1) * (p - 1) * static_cast<uint64_t>(n_out + 1);
  if (worst >> 32) throw std::overflow_error("conv_acc: accumulation window too large");

  int64_t nnz_a = 0, nnz_b = 0;
  for (int64_t i = 0; i < std::min(na, n_out); ++i) nnz_a += (a[i] != 0);
  for (int64_t i = 0; i < std::min(nb, n_out); ++i) nnz_b += (b[i] != 0);
  // Iterate over the sparser operand so theta-style series cost O(N sqrt N).
  if (nnz_b < nnz_a) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  for (int64_t i = 0; i < std::min(na, n_out); ++i) {
    const uint32_t ai = a[i];
    if (!ai) continue;
    const int64_t m = std::min(nb, n_out - i);
    uint32_t* __restrict dst = out + i;
    const uint32_t* __restrict src = b;
    for (int64_t j = 0; j < m; ++j) dst[j] += ai * src[j];
  }
}

QSeries mul(const QSeries& a, const QSeries& b) {
  require_same_modulus(a, b);
  int64_t N = std::min(a.precision(), b.precision());
  QSeries r(a.p, N);
  conv_acc(a.c.data(), a.precision(), b.c.data(), b.precision(), r.c.data(), N, a.p);
  reduce_all(r.c, a.p);
  r.weight = combined_weight(a, b);
  if (a.level && b.level && *a.level == *b.level) r.level = a.level;
  return r;
}

QSeries truncate(const QSeries& f, int64_t N) {
  if (N > f.precision()) throw std::invalid_argument("QSeries: cannot extend precision");
  QSeries r = f;
  r.c.resize(static_cast<size_t>(N));
  return r;
}

QSeries shift(const QSeries& f, int64_t v) {
  if (v < 0) throw std::invalid_argument("shift: negative exponent");
  QSeries r(f.p, f.precision() + v);
  std::copy(f.c.begin(), f.c.end(), r.c.begin() + v);
  r.weight = f.weight;
  r.level = f.level;
  return r;
}

QSeries substitute(const QSeries& f, int64_t m) {
  if (m < 1) throw std::invalid_argument("substitute: m must be positive");
  if (m == 1) return f;
  QSeries r(f.p, m * (f.precision() - 1) + 1);
  for (int64_t n = 0; n < f.precision(); ++n)
    r.c[static_cast<size_t>(n * m)] = f.c[static_cast<size_t>(n)];
  r.weight = f.weight;
  if (f.level) r.level = *f.level * m;
  return r;
}

QSeries pow(const QSeries& f, uint64_t e) {
  const int64_t N = f.precision();
  if (e == 0) {
    QSeries r = qs_one(f.p, N);
    r.weight = 0;
    return r;
  }
  if (e == 1) return f;

  auto finish_weight = [&](QSeries& r) {
    if (f.weight) r.weight = static_cast<int64_t>(e) * *f.weight;
    r.level = f.level;
  };

  const uint32_t p = f.p;
  if (p <= 7 && e >= p) {
    // Base-p digits glued with Frobenius: f^e = prod_i (f^{d_i})(q^{p^i}).
    std::vector<uint32_t> digits;
    for (uint64_t m = e; m; m /= p) digits.push_back(static_cast<uint32_t>(m % p));
    // Small powers f^1..f^{p-1} on demand.
    std::vector<QSeries> small(p);
    small[1] = f;
    small[1].weight.reset();
    uint32_t built = 1;
    auto small_power = [&](uint32_t d) -> const QSeries& {
      while (built < d) {
        small[built + 1] = mul(small[built], small[1]);
        ++built;
      }
      return small[d];
    };
    QSeries result;
    bool have = false;
    int64_t scale = 1;
    for (size_t i = 0; i < digits.size(); ++i) {
      if (digits[i]) {
        QSeries g = small_power(digits[i]);
        if (scale > 1) {
          if (scale >= N) {
            // Only the constant term survives below the precision window.
            QSeries h = qs_constant(p, N, g.c[0]);
            g = h;
          } else {
            g = truncate(substitute(g, scale), N);
          }
        }
        result = have ? mul(result, g) : g;
        have = true;
      }
      if (scale <= N) scale = checked_mul(scale, p);
    }
    finish_weight(result);
    return result;
  }

  // Binary powering.
  QSeries base = f;
  base.weight.reset();
  QSeries result;
  bool have = false;
  uint64_t m = e;
  while (m) {
    if (m & 1) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    m >>= 1;
    if (m) base = mul(base, base);
  }
  finish_weight(result);
  return result;
}

QSeries inverse(const QSeries& f) {
  const int64_t N = f.precision();
  if (N < 1 || f.c[0] % f.p == 0)
    throw std::invalid_argument("inverse: constant term is not a unit");
  const uint32_t p = f.p;
  const uint32_t c0inv = inv_mod(f.c[0], p);
  QSeries r(p, N);
  r.c[0] = c0inv;
  for (int64_t n = 1; n < N; ++n) {
    uint64_t acc = 0;
    for (int64_t i = 1; i <= n; ++i)
      acc += static_cast<uint64_t>(f.c[i]) * r.c[n - i];
    uint32_t s = static_cast<uint32_t>(acc % p);
    r.c[n] = mul_mod(s ? p - s : 0, c0inv, p);
  }
  return r;
}

QSeries theta_op(const QSeries& f) {
  QSeries r(f.p, f.precision());
  for (int64_t n = 0; n < f.precision(); ++n)
    r.c[n] = mul_mod(reduce_mod(n, f.p), f.c[n], f.p);
  if (f.weight) r.weight = *f.weight + f.p + 1;
  r.level = f.level;
  return r;
}

bool equal_to_precision(const QSeries& a, const QSeries& b, int64_t N) {
  if (a.p != b.p) return false;
  if (N > a.precision() || N > b.precision())
    throw std::invalid_argument("equal_to_precision: window exceeds precision");
  for (int64_t n = 0; n < N; ++n)
    if (a.c[n] != b.c[n]) return false;
  return true;
}

}  // namespace heckenil
