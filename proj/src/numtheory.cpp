#include "olab/numtheory.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace olab {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in addition");
  }
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in multiplication");
  }
  return out;
}

int64_t pow4_checked(int64_t e) {
  if (e < 0) throw std::invalid_argument("pow4: negative exponent");
  if (e > 31) throw std::overflow_error("4^e exceeds the 64-bit range");
  return int64_t{1} << (2 * e);
}

int64_t Factorization::value() const {
  int64_t n = 1;
  for (const auto& [prime, exponent] : factors) {
    for (int64_t i = 0; i < exponent; ++i) n = checked_mul(n, prime);
  }
  return n;
}

int64_t gcd(int64_t a, int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd: arguments must be non-negative");
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

Factorization factorize(int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  auto strip = [&](int64_t d) {
    if (n % d != 0) return;
    int64_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.factors.push_back({d, e});
  };
  strip(2);
  strip(3);
  // remaining factors are coprime to 6; step the 6k +- 1 wheel
  for (int64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

int64_t euler_phi(int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int64_t phi = 1;
  for (const auto& [prime, exponent] : factorize(n).factors) {
    phi = checked_mul(phi, prime - 1);
    for (int64_t i = 1; i < exponent; ++i) phi = checked_mul(phi, prime);
  }
  return phi;
}

int mobius(int64_t n) {
  if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
  int distinct = 0;
  for (const auto& [prime, exponent] : factorize(n).factors) {
    if (exponent >= 2) return 0;
    ++distinct;
  }
  return distinct % 2 == 0 ? 1 : -1;
}

int64_t divisor_count(int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisor_count: n must be positive");
  int64_t d = 1;
  for (const auto& [prime, exponent] : factorize(n).factors) {
    d = checked_mul(d, exponent + 1);
  }
  return d;
}

int64_t two_adic_valuation(int64_t n) {
  if (n <= 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

int64_t gamma_value(int64_t k, int64_t ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("gamma_value: k and ell must be >= 1");
  return checked_mul(checked_add(checked_mul(2, k), -1), pow4_checked(ell) / 2);
}

std::optional<GammaWitness> gamma_membership(int64_t n) {
  const int64_t v = two_adic_valuation(n);
  if (v % 2 == 0) return std::nullopt;
  const int64_t odd = n >> v;
  return GammaWitness{(odd + 1) / 2, (v + 1) / 2};
}

bool in_gamma(int64_t n) {
  return std::countr_zero(static_cast<std::uint64_t>(n)) % 2 == 1;
}

}  // namespace olab
