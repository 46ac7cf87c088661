#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckenil/basis.hpp"
#include "oracles.hpp"

using namespace heckenil;

TEST_CASE("hecke_T basics") {
  // constant series of weight k maps to (1 + ell^{k-1}) times itself
  QSeries one = qs_one(7, 30);
  one.weight = 12;
  QSeries img = hecke_T(one, HeckeSpec{3, std::nullopt, false});
  CHECK(img.precision() == 10);
  CHECK(img.c[0] == (1 + pow_mod(3, 11, 7)) % 7);
  for (int64_t n = 1; n < 10; ++n) CHECK(img.c[n] == 0);

  // Delta mod 5 under T_2: q-coefficient is tau(2) = 1 mod 5
  QSeries d = delta_series(5, 40);
  QSeries t2 = hecke_T(d, HeckeSpec{2, std::nullopt, false});
  CHECK(t2.c[1] == 1);
  CHECK(t2.precision() == 20);

  // Delta mod 2 under T_5 vanishes (the m = 1 vanishing case)
  QSeries d2 = delta_series(2, 500);
  CHECK(hecke_T(d2, HeckeSpec{5, std::nullopt, false}).is_zero());

  QSeries noweight = euler_product(1, 5, 30);
  CHECK_THROWS_AS(hecke_T(noweight, HeckeSpec{2, std::nullopt, false}), std::invalid_argument);
  CHECK_THROWS_AS(hecke_T(truncate(d, 3), HeckeSpec{5, std::nullopt, false}),
                  std::invalid_argument);
  // T'_ell needs ell = +-1 mod p
  CHECK_THROWS_AS(hecke_T(d, HeckeSpec{2, std::nullopt, true}), std::invalid_argument);
}

TEST_CASE("U operator") {
  QSeries ones(5, 40);
  for (auto& x : ones.c) x = 1;
  CHECK(equal_to_precision(u_op(ones, 2), truncate(ones, 20), 20));

  QSeries q = shift(qs_one(5, 8), 1);  // the series q
  CHECK(u_op(q, 3).is_zero());

  // g_0 = A - A^2 lies in Ker(U_3) mod 3
  QSeries A = named_form(FormTag::AForm, 3, 901);
  QSeries g0 = sub(A, mul(A, A));
  CHECK(u_op(g0, 3).precision() == 300);
  CHECK(u_op(g0, 3).is_zero());

  CHECK_THROWS_AS(u_op(truncate(ones, 2), 3), std::invalid_argument);
}

TEST_CASE("T_ell decomposes as U_ell plus ell^{k-1} V_ell") {
  QSeries d = delta_series(7, 200);
  for (uint32_t ell : {2u, 3u, 5u}) {
    QSeries t = hecke_T(d, HeckeSpec{ell, std::nullopt, false});
    QSeries u = u_op(d, ell);
    uint32_t lk = pow_mod(ell, 11, 7);
    for (int64_t n = 0; n < t.precision(); ++n) {
      uint32_t v = (n % ell == 0) ? mul_mod(lk, d.c[n / ell], 7) : 0;
      CHECK(t.c[n] == add_mod(u.c[n], v, 7));
    }
  }
}

TEST_CASE("ell^{k-1} mod p is weight-independent when ell = +-1 mod p") {
  // This is what licenses applying T'_ell to inhomogeneous representatives.
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t ell = 2; ell < 60; ++ell) {
      if (!is_prime(ell) || ell == p) continue;
      if (ell % p != 1 && ell % p != p - 1) continue;
      for (int64_t k : {2, 4, 12, 36, 960000}) {
        CHECK(pow_weight_mod(ell, k - 1, p) == ell % p);
      }
    }
  }
}

TEST_CASE("Hecke operators commute") {
  for (uint32_t p : {3u, 5u}) {
    QSeries f = pow(delta_series(p, 800), 3);
    for (auto [l1, l2] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 7}, {2, 11}, {7, 11}}) {
      if (l1 == p || l2 == p) continue;
      QSeries a = hecke_T(hecke_T(f, HeckeSpec{l1, std::nullopt, false}),
                          HeckeSpec{l2, std::nullopt, false});
      QSeries b = hecke_T(hecke_T(f, HeckeSpec{l2, std::nullopt, false}),
                          HeckeSpec{l1, std::nullopt, false});
      int64_t w = std::min(a.precision(), b.precision());
      CHECK(equal_to_precision(a, b, w));
    }
  }
}

TEST_CASE("iterated coefficient closed form: trivial cases") {
  QSeries d = delta_series(7, 64);
  auto acc = [&](int64_t n) { return n < d.precision() ? d.at(n) : 0u; };
  // r = 0 is the identity, r = 1 at ell-coprime n reads c(ell n)
  CHECK(iterated_coeff_fp(acc, 0, 5, 2, 12, 7) == d.at(5));
  CHECK(iterated_coeff_fp(acc, 1, 5, 2, 12, 7) == d.at(10));
}

TEST_CASE("iterated coefficient equals explicit operator iteration") {
  // q^3 coefficient of Delta | T_2^4 mod 7, input precision 2^4 * 4 = 64
  QSeries d = delta_series(7, 64);
  QSeries it = d;
  for (int i = 0; i < 4; ++i) it = hecke_T(it, HeckeSpec{2, std::nullopt, false});
  REQUIRE(it.precision() >= 4);
  auto acc = [&](int64_t n) { return d.at(n); };
  CHECK(iterated_coeff_fp(acc, 4, 3, 2, 12, 7) == it.at(3));
}

TEST_CASE("closed form vs direct recursion, exact over Z") {
  // The identity is formal in the coefficients, so an arbitrary accessor
  // gives an exact cross-check of the binomial bookkeeping.
  auto c = [](int64_t n) -> oracle::big {
    return oracle::big(n) * n % 1009 + 3 * (n % 7) + 1;
  };
  auto lift = [](int64_t v) { return oracle::big(v); };
  for (int64_t ell : {2, 3, 5}) {
    oracle::DirectIteration direct{c, ell, 12, {}};
    for (int64_t r = 0; r <= 6; ++r) {
      for (int64_t n = 1; n <= 50; ++n) {
        oracle::big formula = iterated_coeff<oracle::big>(c, lift, r, n, ell, 12);
        CHECK(formula == direct.run(r, n));
      }
    }
  }
}

TEST_CASE("closed form on integer Delta expansions at small precision") {
  const int64_t N = 3300;
  auto dz = oracle::naive_delta_power(1, N);
  auto c = [&](int64_t n) -> oracle::big { return n < N ? dz[n] : oracle::big(0); };
  auto lift = [](int64_t v) { return oracle::big(v); };
  oracle::DirectIteration direct{c, 2, 12, {}};
  for (int64_t r = 0; r <= 6; ++r)
    for (int64_t n = 1; n <= 50; ++n) {
      if (n * 64 >= N) continue;
      CHECK(iterated_coeff<oracle::big>(c, lift, r, n, 2, 12) == direct.run(r, n));
    }
}

TEST_CASE("mod-p collapse of the iterate") {
  // c_{p^r}(n) = c(ell^{p^r} n) - ell^{k-1} c(ell^{p^r-2} n) mod p at
  // (p, ell, r) = (3, 2, 1), f = Delta, odd n <= 20
  QSeries d = delta_series(3, 163);
  auto acc = [&](int64_t n) { return n < d.precision() ? d.at(n) : 0u; };
  for (int64_t n = 1; n <= 20; n += 2) {
    uint32_t lhs = iterated_coeff_fp(acc, 3, n, 2, 12, 3);  // three iterations = p^1
    uint32_t rhs = iterated_coeff_mod_p(acc, 1, n, 2, 12, 3);
    CHECK(lhs == rhs);
  }
  // r = 1, p = 2 reads c(ell^2 n) - ell^{k-1} c(n)
  QSeries d2 = delta_series(2, 9 * 21);
  auto acc2 = [&](int64_t n) { return n < d2.precision() ? d2.at(n) : 0u; };
  for (int64_t n = 1; n <= 20; ++n) {
    if (n % 3 == 0) continue;
    CHECK(iterated_coeff_mod_p(acc2, 1, n, 3, 12, 2) ==
          sub_mod(d2.at(9 * n), mul_mod(pow_mod(3, 11, 2), d2.at(n), 2), 2));
  }
  CHECK_THROWS_AS(iterated_coeff_mod_p(acc2, 1, 6, 3, 12, 2), std::invalid_argument);
  CHECK_THROWS_AS(iterated_coeff_mod_p(acc2, 0, 5, 3, 12, 2), std::invalid_argument);
}
