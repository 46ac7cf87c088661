#pragma once

#include "heckenil/qseries.hpp"

namespace heckenil {

// prod_{n>=1} (1 - q^{delta n}) mod p via the pentagonal-number expansion.
QSeries euler_product(int64_t delta, uint32_t p, int64_t N);

// prod_{n>=1} (1 - q^{delta n})^3 = sum_{n odd} chi_-4(n) n q^{delta(n^2-1)/8},
// the sparse cube that keeps eta-power expansions out of dense convolutions.
QSeries euler_product_cubed(int64_t delta, uint32_t p, int64_t N);

enum class FormTag {
  EtaProduct,  // eta(delta z)^e, requires 24 | delta*e
  Delta,       // eta(z)^24
  DDelta,      // eta(delta z)^{24/delta}, delta | 24
  E2,          // 1 - 24 sum sigma_1(n) q^n
  E4,          // 1 + 240 sum sigma_3(n) q^n
  E6,          // 1 - 504 sum sigma_5(n) q^n
  E2N,         // N E_2(Nz) - E_2(z)
  ThetaBig,    // sum_{n in Z} q^{n^2}
  FForm,       // eta(4z)^8 / eta(2z)^4
  AForm,       // eta(2z)^16 / eta(z)^8
  GForm,       // Delta(2z)
  PForm        // 2 E_2(2z) - E_2(z)
};

struct NamedForm {
  FormTag tag;
  int64_t delta = 0;  // EtaProduct / DDelta
  int64_t e = 0;      // EtaProduct exponent
  int64_t n = 0;      // E2N level
};

inline NamedForm eta_product(int64_t delta, int64_t e) { return {FormTag::EtaProduct, delta, e, 0}; }
inline NamedForm d_delta(int64_t delta) { return {FormTag::DDelta, delta, 0, 0}; }
inline NamedForm e2n(int64_t n) { return {FormTag::E2N, 0, 0, n}; }

QSeries named_form(const NamedForm& form, uint32_t p, int64_t N);
inline QSeries named_form(FormTag tag, uint32_t p, int64_t N) {
  return named_form(NamedForm{tag, 0, 0, 0}, p, N);
}

inline QSeries delta_series(uint32_t p, int64_t N) { return named_form(FormTag::Delta, p, N); }

enum class ThetaKind { Eta, Eta3, SqSum };

// Sparse theta-type expansions:
//   Eta:   sum_{n>=1, gcd(n,6)=1} chi_12(n) q^{scale n^2 / 24}   (24 | scale)
//   Eta3:  sum_{n>=1 odd} chi_-4(n) n q^{scale n^2 / 8}          (8 | scale)
//   SqSum: 1 + 2 sum_{n>=1} q^{scale n^2}
QSeries theta_expansion(ThetaKind kind, uint32_t p, int64_t N, int64_t scale = 1);

// Divisor power sums sigma_k(1..N-1) mod p by sieving.
std::vector<uint32_t> sigma_table(int64_t k, uint32_t p, int64_t N);

// Multiply f by 1 / prod (1 - q^n) using the pentagonal recurrence
// (O(N sqrt N), no dense convolution).
QSeries divide_by_euler(const QSeries& f);

}  // namespace heckenil
