#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "olab/numtheory.hpp"

using namespace olab;

namespace {

// independent totient: count coprime residues directly
int64_t phi_brute(int64_t n) {
  int64_t c = 0;
  for (int64_t m = 1; m <= n; ++m) {
    if (std::gcd(m, n) == 1) ++c;
  }
  return c;
}

// exhaustive generation of {(2k-1) * 2^(2l-1) <= bound}
std::set<int64_t> gamma_set(int64_t bound) {
  std::set<int64_t> s;
  for (int64_t ell = 1;; ++ell) {
    const int64_t step = int64_t{1} << (2 * ell - 1);
    if (step > bound) break;
    for (int64_t k = 1; (2 * k - 1) * step <= bound; ++k) {
      s.insert((2 * k - 1) * step);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(18, 12) == 6);
  CHECK(gcd(11, 1) == 1);
  for (int64_t n : {1, 2, 97, 4096}) CHECK(gcd(1, n) == 1);
  CHECK(gcd(0, 5) == 5);
  CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gcd(-2, 4), std::invalid_argument);
}

TEST_CASE("factorize canonical form") {
  const Factorization f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});

  CHECK(factorize(1).factors.empty());
  const Factorization f97 = factorize(97);
  REQUIRE(f97.factors.size() == 1);
  CHECK(f97.factors[0] == PrimePower{97, 1});

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  // primes strictly increasing, exponents >= 1, product restores n
  for (int64_t n = 1; n <= 3000; ++n) {
    const Factorization f = factorize(n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(f.factors[i].exponent >= 1);
      if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
    CHECK(f.value() == n);
  }
}

TEST_CASE("euler_phi against brute force") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
  for (int64_t n = 1; n <= 10000; ++n) {
    CHECK(euler_phi(n) == phi_brute(n));
  }
}

TEST_CASE("euler_phi equals the Mobius divisor sum") {
  for (int64_t n = 1; n <= 10000; ++n) {
    int64_t sum = 0;
    for (int64_t m = 1; m * m <= n; ++m) {
      if (n % m != 0) continue;
      sum += mobius(m) * (n / m);
      const int64_t other = n / m;
      if (other != m) sum += mobius(other) * m;
    }
    CHECK(euler_phi(n) == sum);
  }
}

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(1) == 1);
  for (int64_t p : {2, 3, 5, 97, 9973}) CHECK(divisor_count(p) == 2);
  CHECK_THROWS_AS(divisor_count(0), std::invalid_argument);
}

TEST_CASE("two_adic_valuation") {
  CHECK(two_adic_valuation(8) == 3);
  CHECK(two_adic_valuation(1) == 0);
  CHECK(two_adic_valuation(24) == 3);
  CHECK_THROWS_AS(two_adic_valuation(0), std::invalid_argument);
}

TEST_CASE("gamma_membership witnesses") {
  const auto w2 = gamma_membership(2);
  REQUIRE(w2.has_value());
  CHECK(*w2 == GammaWitness{1, 1});

  CHECK_FALSE(gamma_membership(4).has_value());
  CHECK_FALSE(gamma_membership(11).has_value());

  const auto w6 = gamma_membership(6);
  REQUIRE(w6.has_value());
  CHECK(*w6 == GammaWitness{2, 1});

  CHECK_THROWS_AS(gamma_membership(0), std::invalid_argument);
}

TEST_CASE("gamma_membership matches exhaustive generation up to 10^4") {
  const std::set<int64_t> gamma = gamma_set(10000);
  for (int64_t n = 1; n <= 10000; ++n) {
    const auto w = gamma_membership(n);
    CHECK(w.has_value() == (gamma.count(n) == 1));
    CHECK(in_gamma(n) == w.has_value());
    if (w) {
      CHECK(gamma_value(w->k, w->ell) == n);
      CHECK(w->ell == (two_adic_valuation(n) + 1) / 2);
    }
  }
}

TEST_CASE("Gamma closure under multiplication by 4 and by odds") {
  for (int64_t n = 1; n <= 10000; ++n) {
    if (!in_gamma(n)) continue;
    if (4 * n <= 10000) CHECK(in_gamma(4 * n));
    for (int64_t m = 1; (2 * m - 1) * n <= 10000; ++m) {
      CHECK(in_gamma((2 * m - 1) * n));
    }
  }
}

TEST_CASE("multiplicativity on coprime pairs") {
  for (int64_t a = 1; a <= 300; ++a) {
    for (int64_t b = a + 1; b <= 300; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      CHECK(mobius(a * b) == mobius(a) * mobius(b));
      CHECK(divisor_count(a * b) == divisor_count(a) * divisor_count(b));
    }
  }
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK(checked_mul(3, 5) == 15);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK(pow4_checked(0) == 1);
  CHECK(pow4_checked(31) == (int64_t{1} << 62));
  CHECK_THROWS_AS(pow4_checked(32), std::overflow_error);
}
