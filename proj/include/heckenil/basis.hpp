#pragma once

#include <memory>
#include <optional>

#include "heckenil/degree_value.hpp"
#include "heckenil/forms.hpp"
#include "heckenil/hecke.hpp"
#include "heckenil/qseries.hpp"

namespace heckenil {

// Polynomial bases on which nilpotency is decided:
//   DeltaBasis  F_p[Delta] at level one, p in {2,3,5,7}
//   FBasis      F_3[F] at level four (the full mod-3 algebra there)
//   D2Span      span{D_2^k : gcd(k,6)=1} at level four, mod 3 -- its
//               T_ell-invariance is only conjectural, so solving into it
//               can legitimately fail with residual_error.
enum class BasisKind { DeltaBasis, FBasis, D2Span };

struct BasisTag {
  BasisKind kind = BasisKind::DeltaBasis;
  uint32_t p = 0;
  friend bool operator==(const BasisTag& a, const BasisTag& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

BasisTag delta_basis(uint32_t p);
inline BasisTag f_basis() { return BasisTag{BasisKind::FBasis, 3}; }
inline BasisTag d2_span() { return BasisTag{BasisKind::D2Span, 3}; }

const char* basis_name(const BasisTag& tag);
std::optional<BasisTag> basis_from_name(const std::string& name, uint32_t p);

// Raised when a q-expansion fails to land in the claimed span at the
// claimed degree bound.  For D2Span this is meaningful data, not a bug.
struct residual_error : std::runtime_error {
  int64_t index;
  uint32_t value;
  residual_error(const std::string& what, int64_t idx, uint32_t val)
      : std::runtime_error(what), index(idx), value(val) {}
};

// Element of a polynomial basis.  coeffs is indexed by basis-element
// degree (for D2Span, by D_2-exponent; entries at exponents not coprime
// to 6 stay zero).  degree is the largest index with nonzero coefficient.
struct PolyRep {
  BasisTag basis;
  std::vector<uint32_t> coeffs;
  DegreeValue degree;

  bool is_zero() const { return degree.is_neg_inf(); }
  DegreeValue second_highest_degree() const;
  friend bool operator==(const PolyRep& a, const PolyRep& b);
};

PolyRep make_poly(const BasisTag& tag, std::vector<uint32_t> coeffs);
PolyRep monomial(const BasisTag& tag, int64_t degree, uint32_t coeff = 1);

// Whether exponent n indexes a basis element of the tagged span.
bool span_exponent(const BasisTag& tag, int64_t n);

// q-expansions of the basis powers 0..d to precision N, cached per tag
// with geometric growth.  Rows are plain coefficient arrays.
class BasisCache;
const std::vector<std::vector<uint32_t>>& basis_q_matrix(const BasisTag& tag, int64_t d,
                                                         int64_t N);

// Weight (as an integer) of the degree-n basis element.
int64_t basis_weight(const BasisTag& tag, int64_t n);

QSeries expand(const PolyRep& P, int64_t N);

// Unitriangular back-substitution on coefficients 0..d, then verification
// that coefficients d+1..d+slack of the reconstruction agree with f.
PolyRep to_poly(const QSeries& f, const BasisTag& tag, int64_t d, int64_t slack = 16);

// One application of T_ell (or T'_ell) to a polynomial representative:
// expand to precision ell*(deg+1+slack), act, re-solve with degree bound
// deg, verify the residual over `slack` extra coefficients.
PolyRep hecke_on_poly(const PolyRep& P, uint32_t ell, bool modified, int64_t slack = 16);

// f_{5i+j} = Delta^{5i} f_j in F_5[Delta], the support-split basis:
//   f_0 = 1, f_1 = D+4D^2, f_2 = D^2, f_3 = D^3+2D^4+3D^5, f_4 = D^4+D^5.
PolyRep f_basis_element(int64_t i, int64_t j);

// Delta^{5i+j} re-expressed in the f-basis: list of (basis index, coeff).
std::vector<std::pair<int64_t, uint32_t>> delta_power_in_f_basis(int64_t k);

// Zero out all coefficients with index not congruent to i mod 6.
QSeries rho_projection(const QSeries& f, int64_t i);

// Level-two mod-3 apparatus: A = eta(2z)^16/eta(z)^8, G = Delta(2z), and
// g_i = A^i (A - A^2), whose i != 2 mod 3 members span Ker(U_3).
struct Level2Apparatus {
  QSeries A;
  QSeries G;
  QSeries delta;
  std::vector<QSeries> g;
};
Level2Apparatus level2_apparatus(int64_t d, int64_t N);

// Exact solve of f against an explicit list of q-series (small dense
// Gaussian elimination over F_p), with every row of the window checked.
// Returns the coordinates, or nullopt if f is not in the span.
std::optional<std::vector<uint32_t>> span_solve(const std::vector<QSeries>& basis,
                                                const QSeries& f, int64_t rows);

// T'_ell as a matrix on the degree-filtered basis: column i holds the
// coordinates of (basis element i) | T'_ell, solved with degree bound i
// and the residual verified over `slack` extra q-coefficients.  Columns at
// non-span exponents (D2Span) are empty.  Immutable once built.
struct HeckeMatrix {
  BasisTag basis;
  uint32_t ell = 0;
  bool modified = true;
  int64_t slack = 16;
  int64_t max_degree = -1;
  std::vector<std::vector<uint8_t>> cols;  // trimmed at the column degree

  DegreeValue column_degree(int64_t i) const;
  // w = M v over F_p; v indexed by basis degree, |v| <= max_degree+1.
  std::vector<uint8_t> apply(const std::vector<uint8_t>& v) const;
  DegreeValue degree_of(const std::vector<uint8_t>& v) const;
};

HeckeMatrix build_hecke_matrix(const BasisTag& tag, uint32_t ell, bool modified,
                               int64_t d, int64_t slack = 16);

// Process-wide cache of built matrices (read-mostly: lookups are lock-free
// on the returned shared_ptr, builds are serialized).
std::shared_ptr<const HeckeMatrix> ensure_hecke_matrix(const BasisTag& tag, uint32_t ell,
                                                       bool modified, int64_t d,
                                                       int64_t slack = 16);

// (F - F^3)^k over F_3: the F-basis coordinates of D_2^k.
std::vector<uint32_t> d2_power_in_f_basis(int64_t k);

}  // namespace heckenil
