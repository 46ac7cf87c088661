#pragma once

#include <functional>

#include "heckenil/qseries.hpp"

namespace heckenil {

// The modified operator T'_ell subtracts 2 after T_ell exactly when
// ell = 1 mod p; for ell = -1 mod p it is T_ell itself.
struct HeckeSpec {
  uint32_t ell = 0;
  std::optional<int64_t> weight;  // overrides the series weight tag
  bool modified = false;
};

// f | T_ell: coefficient n is c(ell n) + ell^{k-1} c(n/ell), with
// c(n/ell) = 0 when ell does not divide n.  Output precision is
// floor(N / ell): supplying ell*d + 1 input coefficients yields d output
// coefficients, and nothing beyond that is fabricated.
QSeries hecke_T(const QSeries& f, const HeckeSpec& spec);

// f | U_m: coefficient n is c(mn); precision floor(N / m).
QSeries u_op(const QSeries& f, int64_t m);

namespace detail {
template <class Ring, class Lift>
std::vector<Ring> pascal_row(int64_t r, Lift&& lift) {
  std::vector<Ring> row(static_cast<size_t>(r) + 1, lift(0));
  row[0] = lift(1);
  for (int64_t i = 1; i <= r; ++i)
    for (int64_t j = i; j >= 1; --j) row[j] = row[j] + row[j - 1];
  return row;
}

template <class Ring>
Ring ring_pow(Ring base, uint64_t e, Ring one) {
  Ring r = one;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}
}  // namespace detail

// Closed form for the n-th coefficient of f | T_ell^r in terms of the
// coefficients of f.  With s = v_ell(n),
//
//   c_r(n) = sum_{i=0}^{s} C(r,i) ell^{i(k-1)} c(ell^{r-2i} n)
//          + sum_{j=s+1}^{floor((r+s)/2)} (C(r,j) - C(r,j-s-1)) ell^{j(k-1)} c(ell^{r-2j} n),
//
// the second sum being empty when s+1 > floor((r+s)/2).  This is a formal
// identity about the two-term coefficient recurrence, so Ring may be any
// commutative ring: exact big integers for oracles, F_p in production.
// `lift` embeds small integers into Ring; `c` maps int64 indices to Ring.
template <class Ring, class Acc, class Lift>
Ring iterated_coeff(Acc&& c, Lift&& lift, int64_t r, int64_t n, int64_t ell, int64_t k) {
  if (r < 0 || n < 0 || ell < 2 || k < 1)
    throw std::invalid_argument("iterated_coeff: bad arguments");
  int64_t s;
  if (n == 0) {
    s = r;  // v_ell(0) is +infinity; terms with i > r vanish via the binomials
  } else {
    s = 0;
    for (int64_t m = n; m % ell == 0; m /= ell) ++s;
  }
  auto binom = detail::pascal_row<Ring>(r, lift);
  const Ring one = lift(1);
  const Ring lk = detail::ring_pow<Ring>(lift(ell), static_cast<uint64_t>(k - 1), one);
  auto index_at = [&](int64_t shift) -> int64_t {
    int64_t idx = n;  // n * ell^shift, exact division when shift < 0
    if (shift >= 0)
      for (int64_t t = 0; t < shift; ++t) idx = checked_mul(idx, ell);
    else
      for (int64_t t = 0; t < -shift; ++t) idx /= ell;
    return idx;
  };
  Ring total = lift(0);
  for (int64_t i = 0; i <= std::min(s, r); ++i) {
    Ring lki = detail::ring_pow<Ring>(lk, static_cast<uint64_t>(i), one);
    total = total + binom[i] * lki * c(index_at(r - 2 * i));
  }
  for (int64_t j = s + 1; j <= (r + s) / 2; ++j) {
    Ring coeff = binom[j] - binom[j - s - 1];
    Ring lkj = detail::ring_pow<Ring>(lk, static_cast<uint64_t>(j), one);
    total = total + coeff * lkj * c(index_at(r - 2 * j));
  }
  return total;
}

// Convenience instantiation over F_p.
uint32_t iterated_coeff_fp(const std::function<uint32_t(int64_t)>& c, int64_t r,
                           int64_t n, int64_t ell, int64_t k, uint32_t p);

// Mod-p collapse of the closed form at p^r iterations, valid when ell does
// not divide n and r >= 1:  c(ell^{p^r} n) - ell^{k-1} c(ell^{p^r - 2} n).
uint32_t iterated_coeff_mod_p(const std::function<uint32_t(int64_t)>& c, int64_t r,
                              int64_t n, int64_t ell, int64_t k, uint32_t p);

}  // namespace heckenil
