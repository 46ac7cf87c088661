#include "heckenil/hecke.hpp"

namespace heckenil {

QSeries hecke_T(const QSeries& f, const HeckeSpec& spec) {
  const uint32_t p = f.p;
  const int64_t ell = spec.ell;
  if (ell < 2) throw std::invalid_argument("hecke_T: ell not set");
  if (f.precision() < ell)
    throw std::invalid_argument("hecke_T: precision below ell");
  std::optional<int64_t> k = spec.weight ? spec.weight : f.weight;
  if (!k) throw std::invalid_argument("hecke_T: weight unknown");
  const uint32_t lk = pow_weight_mod(static_cast<uint64_t>(ell % p), *k - 1, p);
  const bool subtract2 = spec.modified && (ell % p == 1);
  if (spec.modified && ell % p != 1 && ell % p != p - 1)
    throw std::invalid_argument("hecke_T: modified operator requires ell = +-1 mod p");

  const int64_t M = f.precision() / ell;
  QSeries r(p, M);
  for (int64_t n = 0; n < M; ++n) {
    uint32_t v = f.c[static_cast<size_t>(n * ell)];
    if (n % ell == 0) v = add_mod(v, mul_mod(lk, f.c[static_cast<size_t>(n / ell)], p), p);
    if (subtract2) v = sub_mod(v, mul_mod(2 % p, f.c[static_cast<size_t>(n)], p), p);
    r.c[static_cast<size_t>(n)] = v;
  }
  r.weight = k;
  r.level = f.level;
  return r;
}

QSeries u_op(const QSeries& f, int64_t m) {
  if (m < 1) throw std::invalid_argument("u_op: m must be positive");
  if (f.precision() < m) throw std::invalid_argument("u_op: precision below m");
  const int64_t M = f.precision() / m;
  QSeries r(f.p, M);
  for (int64_t n = 0; n < M; ++n) r.c[static_cast<size_t>(n)] = f.c[static_cast<size_t>(n * m)];
  r.weight = f.weight;
  return r;
}

uint32_t iterated_coeff_fp(const std::function<uint32_t(int64_t)>& c, int64_t r,
                           int64_t n, int64_t ell, int64_t k, uint32_t p) {
  auto lift = [p](int64_t x) { return Fp(x, p); };
  auto acc = [&](int64_t idx) { return Fp(static_cast<int64_t>(c(idx)), p); };
  return iterated_coeff<Fp>(acc, lift, r, n, ell, k).v;
}

uint32_t iterated_coeff_mod_p(const std::function<uint32_t(int64_t)>& c, int64_t r,
                              int64_t n, int64_t ell, int64_t k, uint32_t p) {
  if (r < 1) throw std::invalid_argument("iterated_coeff_mod_p: r must be >= 1");
  if (n % ell == 0) throw std::invalid_argument("iterated_coeff_mod_p: ell divides n");
  if (static_cast<int64_t>(p) == ell) throw std::invalid_argument("iterated_coeff_mod_p: ell = p");
  // ell^{p^r} n and ell^{p^r - 2} n as checked 64-bit indices.
  int64_t reps = 1;
  for (int64_t t = 0; t < r; ++t) reps = checked_mul(reps, p);
  int64_t hi = n, lo = n;
  for (int64_t t = 0; t < reps; ++t) hi = checked_mul(hi, ell);
  for (int64_t t = 0; t < reps - 2; ++t) lo = checked_mul(lo, ell);
  const uint32_t lk = pow_weight_mod(static_cast<uint64_t>(ell % p), k - 1, p);
  return sub_mod(c(hi), mul_mod(lk, c(lo), p), p);
}

}  // namespace heckenil
