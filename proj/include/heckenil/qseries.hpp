#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heckenil/modp.hpp"

namespace heckenil {

// Truncated q-expansion over F_p.  Exactly the coefficients
// c(0), ..., c(precision()-1) are known; nothing past the precision is
// ever stored, fabricated or reported.  Binary operations require equal
// moduli and return the minimum of the operand precisions.
struct QSeries {
  uint32_t p = 0;
  std::vector<uint32_t> c;  // residues in [0, p)
  std::optional<int64_t> weight;
  std::optional<int64_t> level;

  QSeries() = default;
  QSeries(uint32_t prime, int64_t precision)
      : p(prime), c(static_cast<size_t>(precision), 0u) {}

  int64_t precision() const { return static_cast<int64_t>(c.size()); }

  uint32_t at(int64_t n) const {
    if (n < 0) return 0;
    if (n >= precision())
      throw std::out_of_range("QSeries: coefficient index beyond precision");
    return c[static_cast<size_t>(n)];
  }

  void set(int64_t n, int64_t value) { c.at(static_cast<size_t>(n)) = reduce_mod(value, p); }

  bool is_zero() const {
    for (uint32_t x : c)
      if (x) return false;
    return true;
  }

  // Order of vanishing restricted to the known window; nullopt if the
  // series is zero to precision.
  std::optional<int64_t> valuation() const {
    for (int64_t n = 0; n < precision(); ++n)
      if (c[static_cast<size_t>(n)]) return n;
    return std::nullopt;
  }
};

QSeries qs_constant(uint32_t p, int64_t N, int64_t value);
inline QSeries qs_one(uint32_t p, int64_t N) { return qs_constant(p, N, 1); }

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, int64_t s);

// Truncated product; result precision = min of operand precisions.
// Weights add when both operands carry one.
QSeries mul(const QSeries& a, const QSeries& b);

// f^e to the precision of f.  For p <= 7 and e >= p the exponent is
// decomposed in base p and the digit blocks are glued with the Frobenius
// substitution f(q)^p = f(q^p); otherwise plain binary powering.
QSeries pow(const QSeries& f, uint64_t e);

// q^v * f.  The shifted coefficients are genuinely known, so precision
// grows by v.
QSeries shift(const QSeries& f, int64_t v);

// f(q^m); all coefficients below m*(N-1)+1 are known.
QSeries substitute(const QSeries& f, int64_t m);

QSeries truncate(const QSeries& f, int64_t N);

// 1/f for f with unit constant term; same precision.
QSeries inverse(const QSeries& f);

// q d/dq; weight metadata increases by p+1.
QSeries theta_op(const QSeries& f);

bool equal_to_precision(const QSeries& a, const QSeries& b, int64_t N);

// Low-level truncated convolution kernel: out[0..n_out) += a * b where the
// operands are coefficient arrays over F_p.  Chooses a sparse-support path
// when one operand has few nonzero terms.  Exposed for the basis builders.
void conv_acc(const uint32_t* a, int64_t na, const uint32_t* b, int64_t nb,
              uint32_t* out, int64_t n_out, uint32_t p);

}  // namespace heckenil
