#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace heckenil {

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}

// Reduce an arbitrary signed integer into [0, p).
inline uint32_t reduce_mod(int64_t a, uint32_t p) {
  int64_t r = a % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

inline uint32_t pow_mod(uint64_t base, uint64_t e, uint32_t p) {
  uint64_t b = base % p;
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// ell^(k-1) mod p for prime p with gcd(ell, p) = 1, reducing the exponent
// mod p-1 first so that huge weights never touch big-integer arithmetic.
inline uint32_t pow_weight_mod(uint64_t ell, int64_t k_minus_1, uint32_t p) {
  if (p == 2) return ell % 2;
  int64_t e = k_minus_1 % static_cast<int64_t>(p - 1);
  if (e < 0) e += p - 1;
  return pow_mod(ell, static_cast<uint64_t>(e), p);
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("inv_mod: not a unit");
  return pow_mod(a, p - 2, p);  // p prime
}

// Kronecker symbol (a|n), extending the Jacobi symbol to all integers.
inline int kronecker(int64_t a, int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v) {
    if ((a & 1) == 0) return 0;
    int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if ((v & 1) && (am8 == 3 || am8 == 5)) result = -result;
  }
  // Jacobi symbol (a|n) with n odd > 0.
  int64_t aa = a % n;
  if (aa < 0) aa += n;
  while (aa != 0) {
    while ((aa & 1) == 0) {
      aa >>= 1;
      int nm8 = static_cast<int>(n % 8);
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(aa, n);
    if ((aa % 4 == 3) && (n % 4 == 3)) result = -result;
    aa %= n;
  }
  return (n == 1) ? result : 0;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw std::overflow_error("checked_mul: index overflow");
  return static_cast<int64_t>(r);
}

// Prime-field element usable as the Ring parameter of the iterated
// coefficient formula (the other instantiation is an exact big integer).
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;
  Fp() = default;
  Fp(int64_t x, uint32_t prime) : v(reduce_mod(x, prime)), p(prime) {}
  friend Fp operator+(Fp a, Fp b) { return Fp(int64_t(add_mod(a.v, b.v, a.p)), a.p); }
  friend Fp operator-(Fp a, Fp b) { return Fp(int64_t(sub_mod(a.v, b.v, a.p)), a.p); }
  friend Fp operator*(Fp a, Fp b) { return Fp(int64_t(mul_mod(a.v, b.v, a.p)), a.p); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

}  // namespace heckenil
