#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckenil/forms.hpp"
#include "oracles.hpp"

using namespace heckenil;

namespace {
uint32_t red(const oracle::big& v, uint32_t p) {
  oracle::big m = v % p;
  if (m < 0) m += p;
  return m.convert_to<uint32_t>();
}
}  // namespace

TEST_CASE("euler product against naive expansion") {
  // 1 - q - q^2 + q^5 + q^7 - q^12 reduced mod 5
  QSeries e = euler_product(1, 5, 13);
  std::vector<uint32_t> want = {1, 4, 4, 0, 0, 1, 0, 1, 0, 0, 0, 0, 4};
  CHECK(e.c == want);
  CHECK(euler_product(2, 3, 3).c == std::vector<uint32_t>{1, 0, 2});
  CHECK(euler_product(1, 2, 1).c == std::vector<uint32_t>{1});

  for (int64_t delta : {1, 2, 3, 5}) {
    for (uint32_t p : {2u, 3u, 7u, 23u}) {
      auto naive = oracle::naive_euler(delta, 80);
      QSeries got = euler_product(delta, p, 80);
      for (int64_t n = 0; n < 80; ++n) CHECK(got.c[n] == red(naive[n], p));
    }
  }
}

TEST_CASE("sparse cube of the euler product") {
  for (uint32_t p : {2u, 5u, 7u}) {
    auto naive = oracle::naive_pow(oracle::naive_euler(2, 120), 3, 120);
    QSeries got = euler_product_cubed(2, p, 120);
    for (int64_t n = 0; n < 120; ++n) CHECK(got.c[n] == red(naive[n], p));
  }
}

TEST_CASE("Delta and eta powers") {
  // tau(2) = -24, tau(3) = 252
  QSeries d = delta_series(5, 4);
  CHECK(d.c == std::vector<uint32_t>{0, 1, 1, 2});
  CHECK(d.weight == 12);

  auto naive = oracle::naive_delta_power(1, 40);
  QSeries big = delta_series(7, 40);
  for (int64_t n = 0; n < 40; ++n) CHECK(big.c[n] == red(naive[n], 7));

  CHECK(named_form(d_delta(2), 3, 2).c == std::vector<uint32_t>{0, 1});
  CHECK(named_form(d_delta(3), 5, 30).weight == 4);

  // P = 2 E_2(2z) - E_2(z) is the constant 1 mod 3
  QSeries P = named_form(FormTag::PForm, 3, 50);
  CHECK(equal_to_precision(P, qs_one(3, 50), 50));

  CHECK_THROWS_AS(named_form(d_delta(5), 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(named_form(eta_product(1, 1), 5, 10), std::invalid_argument);
}

TEST_CASE("multiplication and powering") {
  QSeries d = delta_series(5, 60);
  CHECK(equal_to_precision(mul(d, qs_one(5, 60)), d, 60));

  // Frobenius: pow(Delta, 5) supported on q^{5n} with the Delta coefficients
  QSeries d5 = pow(d, 5);
  for (int64_t n = 0; n < 60; ++n) {
    if (n % 5 == 0)
      CHECK(d5.c[n] == d.c[n / 5]);
    else
      CHECK(d5.c[n] == 0);
  }
  CHECK(*d5.weight == 60);

  // pow against the 24-fold direct convolution at N = 64
  QSeries e = euler_product(1, 2, 64);
  QSeries direct = qs_one(2, 64);
  for (int i = 0; i < 24; ++i) direct = mul(direct, e);
  CHECK(equal_to_precision(pow(e, 24), direct, 64));

  CHECK_THROWS_AS(mul(qs_one(3, 5), qs_one(5, 5)), std::invalid_argument);
  CHECK(mul(qs_one(3, 5), qs_one(3, 9)).precision() == 5);
}

TEST_CASE("theta operator") {
  QSeries d = delta_series(5, 10);
  QSeries td = theta_op(d);
  CHECK(td.c[2] == mul_mod(2, d.c[2], 5));
  CHECK(*td.weight == 12 + 5 + 1);
  CHECK(theta_op(qs_one(7, 10)).is_zero());

  std::mt19937_64 rng(7);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    QSeries f(p, 200);
    for (auto& x : f.c) x = static_cast<uint32_t>(rng() % p);
    QSeries it = f;
    for (uint32_t i = 0; i < p; ++i) it = theta_op(it);
    CHECK(equal_to_precision(it, theta_op(f), 200));
  }
}

TEST_CASE("theta expansions") {
  QSeries eta = theta_expansion(ThetaKind::Eta, 5, 50, 24);
  CHECK(eta.c[1] == 1);
  CHECK(eta.c[25] == 4);  // chi_12(5) = -1
  CHECK(eta.c[49] == 4);  // chi_12(7) = -1
  for (int64_t n : {2, 3, 24, 26}) CHECK(eta.c[n] == 0);

  QSeries sq = theta_expansion(ThetaKind::SqSum, 3, 5);
  CHECK(sq.c == std::vector<uint32_t>{1, 2, 0, 0, 2});

  QSeries e3 = theta_expansion(ThetaKind::Eta3, 7, 10, 8);
  CHECK(e3.c[1] == 1);
  CHECK(e3.c[9] == 4);  // chi_-4(3) * 3 = -3

  CHECK_THROWS_AS(theta_expansion(ThetaKind::Eta, 5, 10, 12), std::invalid_argument);
  CHECK_THROWS_AS(theta_expansion(ThetaKind::Eta3, 5, 10, 4), std::invalid_argument);
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(-8, 5) == -1);
  CHECK(kronecker(12, 1) == 1);
  CHECK(kronecker(12, 11) == 1);
  // Euler criterion cross-check at odd primes
  for (int64_t q : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (int64_t a = -30; a <= 30; ++a) {
      int sym = kronecker(a, q);
      int64_t am = ((a % q) + q) % q;
      int64_t eul = 1;
      for (int64_t i = 0; i < (q - 1) / 2; ++i) eul = eul * am % q;
      int want = (am == 0) ? 0 : (eul == 1 ? 1 : -1);
      CHECK(sym == want);
    }
  }
}

TEST_CASE("series inverse and shifts") {
  std::mt19937_64 rng(11);
  for (uint32_t p : {3u, 5u, 23u}) {
    QSeries f(p, 120);
    f.c[0] = 1;
    for (size_t i = 1; i < f.c.size(); ++i) f.c[i] = static_cast<uint32_t>(rng() % p);
    CHECK(equal_to_precision(mul(f, inverse(f)), qs_one(p, 120), 120));
  }
  QSeries g = shift(euler_product(1, 5, 10), 3);
  CHECK(g.precision() == 13);
  CHECK(g.c[3] == 1);
  QSeries s = substitute(euler_product(1, 5, 10), 4);
  CHECK(s.precision() == 37);
  CHECK(s.c[4] == 4);
  CHECK_THROWS_AS(truncate(qs_one(5, 4), 9), std::invalid_argument);
  CHECK_THROWS_AS(inverse(shift(qs_one(5, 4), 1)), std::invalid_argument);
}
