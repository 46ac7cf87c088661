#pragma once

#include "heckenil/nilpotency.hpp"

namespace heckenil {

// Generating function of t-core partition counts,
// prod (1 - q^{nt})^t / (1 - q^n), coefficients mod p.
QSeries tcore_series(int64_t t, uint32_t p, int64_t N);

// prod (1 - q^n)^r mod p.
QSeries power_partition_series(int64_t r, int64_t N, uint32_t p);

// Count partitions of n with no hook length divisible by t, by explicit
// Ferrers-diagram enumeration.  Exponential; the oracle for tcore_series.
int64_t brute_force_tcore(int64_t t, int64_t n);

// Family constants.
int64_t k_pt(uint32_t p, int t);                 // (9^t-1)/8 or (p^{2t}-1)/24
int64_t m_pt(uint32_t p, int t, uint32_t ell);   // index bound for Delta^{k_pt}
int64_t u_r_const(int64_t r);                    // 1 + floor(r/3)
int64_t r_pm(uint32_t p, int m);                 // (p^m+1)/(p+1), m odd
int64_t u_m_const(int m);                        // 2^m + 1

// eta(delta z)^e * eta(delta p^m z)^e as a q-series mod pmod (e in {1,3}),
// via the sparse theta supports; used for the vanishing-proposition
// factorization identity.
QSeries eta_pair_product(int64_t delta, uint32_t p, int m, int64_t e, uint32_t pmod, int64_t N);

// D_delta^k = eta(delta z)^{(24/delta) k} as a q-series with weight tag.
QSeries d_delta_power(int64_t delta, int64_t k, uint32_t p, int64_t N);

// p^t-core congruence families.  Two phases: (i) rigorous operator
// identity in the polynomial basis (fatal on failure), (ii) coefficient
// spot-check on the a_{p^t} values (failures listed as witnesses).
//   variant 1: ell = -1 mod p,  a(l^{p^r} n - k) = -a(l^{p^r-2} n - k)
//   variant 2: distinct ells = -1 mod p, a(l_1...l_m n - k) = 0
//   variant 3: ell = +1 mod p,  a(l^{p^r} n - k) - a(l^{p^r-2} n - k) = 2 a(n - k)
CongruenceReport check_thm16(uint32_t p, int t, int variant, const std::vector<uint32_t>& ells,
                             int r_exponent, int64_t n_max);

// 12r-th power partition congruences mod 3 (gcd(r,6)=1), with D2^r in the
// F-basis for phase (i).  Variants as above with u_r in place of m_{p,t}.
// For variants 1 and 3 both exponent readings (ell^{u_r} and ell^{3^j}) are
// evaluated and the report records which one holds.
CongruenceReport check_thm18(int64_t r, int variant, const std::vector<uint32_t>& ells, int j,
                             int64_t n_max);

enum class Prop15Case { P1a, P1b, P1c, P1d, P2 };

// Single-operator vanishing: f^{r_{p,m}} | T_ell = 0 (mod p) under the
// case-specific quadratic-symbol hypotheses (validated up front).  Exact
// in the polynomial basis where one exists, else zero to precision N, plus
// the two-theta-series factorization identity where applicable.
CongruenceReport check_prop15(Prop15Case which, uint32_t p, uint32_t ell, int m, int64_t N);

}  // namespace heckenil
