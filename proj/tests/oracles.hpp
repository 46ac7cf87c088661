#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// naive integer polynomial arithmetic, the direct two-term coefficient
// recursion over exact big integers, and exact small-scale series.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_int;

// prod_{n=1}^{N-1} (1 - q^{delta n}) over Z by sequential multiplication.
inline std::vector<big> naive_euler(int64_t delta, int64_t N) {
  std::vector<big> f(static_cast<size_t>(N), 0);
  f[0] = 1;
  for (int64_t n = delta; n < N; n += delta) {
    for (int64_t i = N - 1; i >= n; --i) f[i] -= f[i - n];
  }
  return f;
}

inline std::vector<big> naive_mul(const std::vector<big>& a, const std::vector<big>& b,
                                  int64_t N) {
  std::vector<big> r(static_cast<size_t>(N), 0);
  for (int64_t i = 0; i < N && i < static_cast<int64_t>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int64_t j = 0; i + j < N && j < static_cast<int64_t>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

inline std::vector<big> naive_pow(const std::vector<big>& a, int64_t e, int64_t N) {
  std::vector<big> r(static_cast<size_t>(N), 0);
  r[0] = 1;
  for (int64_t i = 0; i < e; ++i) r = naive_mul(r, a, N);
  return r;
}

// Exact Delta^k coefficients (shifted Euler power) at small precision.
inline std::vector<big> naive_delta_power(int64_t k, int64_t N) {
  auto e24k = naive_pow(naive_euler(1, N), 24 * k, N);
  std::vector<big> d(static_cast<size_t>(N), 0);
  for (int64_t n = k; n < N; ++n) d[n] = e24k[n - k];
  return d;
}

// c_r(n) by the literal recursion c_r(n) = c_{r-1}(ell n) + ell^{k-1} c_{r-1}(n / ell),
// memoized, over exact integers.  Valid for any coefficient function.
struct DirectIteration {
  std::function<big(int64_t)> c;
  int64_t ell, k;
  std::map<std::pair<int64_t, int64_t>, big> memo;

  big run(int64_t r, int64_t n) {
    if (r == 0) return c(n);
    auto key = std::make_pair(r, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    big v = run(r - 1, ell * n);
    if (n % ell == 0) {
      big lk = 1;
      for (int64_t t = 0; t < k - 1; ++t) lk *= ell;
      v += lk * run(r - 1, n / ell);
    }
    memo[key] = v;
    return v;
  }
};

// Exact t-core counts via the generating function over Z.
inline std::vector<big> naive_tcore(int64_t t, int64_t N) {
  auto num = naive_pow(naive_euler(t, N), t, N);
  // divide by prod (1 - q^n): multiply by the partition generating function
  std::vector<big> inv(static_cast<size_t>(N), 0);
  inv[0] = 1;
  auto e1 = naive_euler(1, N);
  for (int64_t n = 1; n < N; ++n) {
    big acc = 0;
    for (int64_t i = 1; i <= n; ++i) acc += e1[i] * inv[n - i];
    inv[n] = -acc;
  }
  return naive_mul(num, inv, N);
}

}  // namespace oracle
