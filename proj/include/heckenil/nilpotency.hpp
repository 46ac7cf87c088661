#pragma once

#include <array>
#include <map>
#include <mutex>

#include "heckenil/basis.hpp"
#include "heckenil/report.hpp"

namespace heckenil {

struct ceiling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NilSpec {
  uint32_t p = 0;
  uint32_t ell = 0;
  BasisKind space = BasisKind::DeltaBasis;
  bool modified = true;
  int64_t slack = 16;
  int64_t ceiling = 0;  // 0: default 4k+4, comfortably above every proven bound
};

// Coordinates of the k-th power in the chosen space: e_k for Delta powers
// and D2 powers, (F - F^3)^k for D2^k viewed inside F_3[F].
std::vector<uint8_t> initial_vector(BasisKind space, int64_t k);

// Least u >= 1 with (power k) | (T'_ell)^u = 0, with the full degree
// trajectory.  Iterates the cached operator matrix; a configurable ceiling
// turns nontermination into a diagnosable error.
NilpotencyReport nilpotency_index(int64_t k, const NilSpec& spec);
NilpotencyReport nilpotency_index(int64_t k, const NilSpec& spec, const HeckeMatrix& M);

// Degree of (power k) | T'_ell after a single application.
DegreeValue degree_lower(int64_t k, const NilSpec& spec);

// The degree-lowering iterations behind the conjecture machinery.
struct ConjVariant {
  enum class Kind { D19Table, S19Prime, S29Double, STriple };
  Kind kind = Kind::S19Prime;
  uint32_t ell = 19;

  static ConjVariant d19_table() { return {Kind::D19Table, 19}; }
  static ConjVariant s19_prime() { return {Kind::S19Prime, 19}; }
  static ConjVariant s29_double() { return {Kind::S29Double, 29}; }
  static ConjVariant s_triple(uint32_t ell) { return {Kind::STriple, ell}; }

  uint32_t p() const {
    switch (kind) {
      case Kind::D19Table:
      case Kind::S19Prime: return 5;
      case Kind::S29Double: return 7;
      case Kind::STriple: return 3;
    }
    return 0;
  }
  BasisKind space() const {
    return kind == Kind::STriple ? BasisKind::D2Span : BasisKind::DeltaBasis;
  }
};

// Iterates k -> modified degree until -inf, memoized (trajectories of
// different k merge heavily); each step costs one verified column of the
// operator matrix.
class SIndexCalculator {
 public:
  SIndexCalculator(ConjVariant variant, int64_t max_k, int64_t slack = 16);
  DegreeValue modified_degree(int64_t k) const;
  DegreeValue raw_degree(int64_t k) const;
  int64_t s_index(int64_t k);

 private:
  ConjVariant variant_;
  std::shared_ptr<const HeckeMatrix> matrix_;
  std::map<int64_t, int64_t> memo_;
  std::mutex mutex_;
};

// Recurrence sequences from the conjectures:
//   c_0=0, c_1=2,        c_i = 3c_{i-1} + 2c_{i-2}
//   y_1=3, y_2=16,       y_i = 5y_{i-1} + 2y_{i-2}
//   z_{7,1}=1, z_{7,2}=2, z_{7,i} = z_{7,i-1} + 2z_{7,i-2}
//   z_{11,2}=2,          z_{11,i} = 2 z_{11,i-1}
int64_t conj_c(int t);
int64_t conj_y(int t);
int64_t conj_z(uint32_t ell, int t);
long double conj_alpha(ConjVariant::Kind kind);

// Nicolas-Serre closed formula 1 + n_3(k) + n_5(k) from the base-2 digits
// of odd k; an upper bound for single-operator indices mod 2.
int64_t ns_formula(int64_t k);

// Proven linear bound on the nilpotency index (Delta powers at level one
// for p in {3,5,7}; D2 powers at level four for p=3), including the p|k
// reductions and, when refine is set, the sharper rows known for
// ell = 1 mod 5 (ell <= 1000) and ell = 1 mod 7.
int64_t thm13_bound(uint32_t p, uint32_t ell, int64_t k, BasisKind space = BasisKind::DeltaBasis,
                    bool refine = false);

// Sweep k = 1..kmax asserting index <= bound; hard failures are collected
// as witnesses.  For level-four spaces only k admissible for the space are
// swept (gcd(k,6)=1 in the D2 span).
CongruenceReport verify_thm13(const NilSpec& spec, int64_t kmax, bool refine = false,
                              int workers = 1);

// Conjecture verification: report-only (never throws on mismatch).
// For S19Prime, check_index_bound additionally sweeps N <= S'.
CongruenceReport verify_conjectures(const ConjVariant& variant, int64_t kmax,
                                    bool check_index_bound = true, int workers = 1);

// Table 2 closed form for D_19(k,5); nullopt where the formula is
// undefined (k = j with v_5(0)).
std::optional<int64_t> d19_closed_form(int64_t k);

// The eight sublinear-bound rows (p, ell, c, alpha-as-log-quotient).
struct SublinearRow {
  uint32_t p, ell;
  long double c;
  long double alpha;
};
std::array<SublinearRow, 8> sublinear_table();

// Pure-arithmetic comparison of the linear bounds against the c*k^alpha
// rows at the four claimed crossover thresholds.
CongruenceReport crossover_check();

// Simple blocked parallel sweep used by the verifiers and the CLI.
void parallel_for(int64_t lo, int64_t hi, int workers,
                  const std::function<void(int64_t)>& fn);

}  // namespace heckenil
