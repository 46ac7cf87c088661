#include "heckenil/forms.hpp"

namespace heckenil {

QSeries euler_product(int64_t delta, uint32_t p, int64_t N) {
  if (N < 1) throw std::invalid_argument("euler_product: precision must be >= 1");
  if (delta < 1) throw std::invalid_argument("euler_product: delta must be positive");
  QSeries r(p, N);
  r.c[0] = 1 % p;
  for (int64_t m = 1;; ++m) {
    int64_t g1 = delta * (m * (3 * m - 1) / 2);
    int64_t g2 = delta * (m * (3 * m + 1) / 2);
    if (g1 >= N && g2 >= N) break;
    uint32_t sign = (m & 1) ? p - 1 : 1;  // (-1)^m
    if (g1 < N) r.c[g1] = add_mod(r.c[g1], sign, p);
    if (g2 < N) r.c[g2] = add_mod(r.c[g2], sign, p);
  }
  return r;
}

QSeries euler_product_cubed(int64_t delta, uint32_t p, int64_t N) {
  if (N < 1) throw std::invalid_argument("euler_product_cubed: precision must be >= 1");
  QSeries r(p, N);
  for (int64_t n = 1;; n += 2) {
    int64_t expo = delta * ((n * n - 1) / 8);
    if (expo >= N) break;
    int64_t coeff = kronecker(-4, n) * n;
    r.c[static_cast<size_t>(expo)] = add_mod(r.c[static_cast<size_t>(expo)], reduce_mod(coeff, p), p);
  }
  return r;
}

std::vector<uint32_t> sigma_table(int64_t k, uint32_t p, int64_t N) {
  std::vector<uint32_t> s(static_cast<size_t>(N), 0u);
  for (int64_t d = 1; d < N; ++d) {
    uint32_t dk = pow_mod(static_cast<uint64_t>(d % p), static_cast<uint64_t>(k), p);
    for (int64_t n = d; n < N; n += d) s[n] = add_mod(s[n], dk, p);
  }
  return s;
}

namespace {

QSeries eisenstein(uint32_t p, int64_t N, int64_t k, int64_t front) {
  // front = -2k/B_k in the integral normalization (-24, 240, -504).
  auto s = sigma_table(k - 1, p, N);
  QSeries r(p, N);
  r.c[0] = 1 % p;
  uint32_t f = reduce_mod(front, p);
  for (int64_t n = 1; n < N; ++n) r.c[n] = mul_mod(f, s[n], p);
  r.weight = k;
  if (k > 2) r.level = 1;
  return r;
}

QSeries e2_series(uint32_t p, int64_t N) { return eisenstein(p, N, 2, -24); }

QSeries e2n_series(int64_t level, uint32_t p, int64_t N) {
  if (level < 2) throw std::invalid_argument("E2N: level must be >= 2");
  QSeries e2 = e2_series(p, N);
  QSeries twisted = truncate(substitute(e2, level), N);
  QSeries r = sub(scale(twisted, level), e2);
  r.weight = 2;
  r.level = level;
  return r;
}

// eta(delta z)^e as a q-series; integral exponents require 24 | delta*e.
// Exponents divisible by 3 run through the sparse Jacobi cube.
QSeries eta_power(int64_t delta, int64_t e, uint32_t p, int64_t N) {
  if ((delta * e) % 24 != 0)
    throw std::invalid_argument("eta power: fractional leading exponent");
  int64_t lead = delta * e / 24;
  QSeries body = (e % 3 == 0)
                     ? pow(euler_product_cubed(delta, p, N), static_cast<uint64_t>(e / 3))
                     : pow(euler_product(delta, p, N), static_cast<uint64_t>(e));
  QSeries r = truncate(shift(body, lead), N);
  if (e % 2 == 0) r.weight = e / 2;
  return r;
}

}  // namespace

QSeries named_form(const NamedForm& form, uint32_t p, int64_t N) {
  if (p < 2) throw std::invalid_argument("named_form: modulus not set");
  switch (form.tag) {
    case FormTag::EtaProduct:
      return eta_power(form.delta, form.e, p, N);
    case FormTag::Delta: {
      QSeries r = eta_power(1, 24, p, N);
      r.weight = 12;
      r.level = 1;
      return r;
    }
    case FormTag::DDelta: {
      if (form.delta < 1 || 24 % form.delta != 0)
        throw std::invalid_argument("D_delta: delta must divide 24");
      int64_t e = 24 / form.delta;
      QSeries r = eta_power(form.delta, e, p, N);
      if (e % 2 == 0) r.weight = e / 2;
      r.level = form.delta * form.delta;
      return r;
    }
    case FormTag::E2:
      return e2_series(p, N);
    case FormTag::E4:
      return eisenstein(p, N, 4, 240);
    case FormTag::E6:
      return eisenstein(p, N, 6, -504);
    case FormTag::E2N:
      return e2n_series(form.n, p, N);
    case FormTag::ThetaBig: {
      QSeries r(p, N);
      r.c[0] = 1 % p;
      for (int64_t n = 1; n * n < N; ++n)
        r.c[n * n] = 2 % p;
      r.level = 4;
      return r;
    }
    case FormTag::FForm: {
      // eta(4z)^8 / eta(2z)^4 = q * E4(q)^8 / E2(q)^4 with E_d the Euler products.
      QSeries num = pow(euler_product(4, p, N), 8);
      QSeries den = pow(euler_product(2, p, N), 4);
      QSeries r = truncate(shift(mul(num, inverse(den)), 1), N);
      r.weight = 2;
      r.level = 4;
      return r;
    }
    case FormTag::AForm: {
      QSeries num = pow(euler_product(2, p, N), 16);
      QSeries den = pow(euler_product(1, p, N), 8);
      QSeries r = truncate(shift(mul(num, inverse(den)), 1), N);
      r.weight = 4;
      r.level = 2;
      return r;
    }
    case FormTag::GForm: {
      int64_t half = (N + 2) / 2;
      QSeries d = delta_series(p, half);
      QSeries r = truncate(substitute(d, 2), N);
      r.weight = 12;
      r.level = 2;
      return r;
    }
    case FormTag::PForm:
      return e2n_series(2, p, N);
  }
  throw std::invalid_argument("named_form: unsupported tag");
}

QSeries theta_expansion(ThetaKind kind, uint32_t p, int64_t N, int64_t scale) {
  if (scale < 1) throw std::invalid_argument("theta_expansion: scale must be positive");
  QSeries r(p, N);
  switch (kind) {
    case ThetaKind::Eta: {
      if (scale % 24 != 0)
        throw std::invalid_argument("theta_expansion(Eta): scale must be divisible by 24");
      for (int64_t n = 1;; n += 1) {
        if (n % 2 == 0 || n % 3 == 0) continue;
        int64_t expo = scale / 24 * n * n;
        if (expo >= N) break;
        int chi = kronecker(12, n);
        r.c[expo] = add_mod(r.c[expo], reduce_mod(chi, p), p);
      }
      break;
    }
    case ThetaKind::Eta3: {
      if (scale % 8 != 0)
        throw std::invalid_argument("theta_expansion(Eta3): scale must be divisible by 8");
      for (int64_t n = 1;; n += 2) {
        int64_t expo = scale / 8 * n * n;
        if (expo >= N) break;
        int chi = kronecker(-4, n);
        r.c[expo] = add_mod(r.c[expo], reduce_mod(chi * n, p), p);
      }
      break;
    }
    case ThetaKind::SqSum: {
      r.c[0] = 1 % p;
      for (int64_t n = 1; scale * n * n < N; ++n)
        r.c[scale * n * n] = 2 % p;
      break;
    }
  }
  return r;
}

QSeries divide_by_euler(const QSeries& f) {
  const int64_t N = f.precision();
  const uint32_t p = f.p;
  QSeries r(p, N);
  for (int64_t n = 0; n < N; ++n) {
    // b(n) = f(n) + sum_m (-1)^{m+1} [b(n - g(m)) + b(n - g(-m))]
    uint64_t plus = f.c[n], minus = 0;
    for (int64_t m = 1;; ++m) {
      int64_t g1 = m * (3 * m - 1) / 2;
      int64_t g2 = m * (3 * m + 1) / 2;
      if (g1 > n && g2 > n) break;
      uint64_t term = 0;
      if (g1 <= n) term += r.c[n - g1];
      if (g2 <= n) term += r.c[n - g2];
      if (m & 1)
        plus += term;
      else
        minus += term;
    }
    r.c[n] = static_cast<uint32_t>((plus % p + p - minus % p) % p);
  }
  return r;
}

}  // namespace heckenil
