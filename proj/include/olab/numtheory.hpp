#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace olab {

using std::int64_t;

// Checked 64-bit arithmetic. Anything that could grow past the integer
// width goes through these; overflow raises std::overflow_error instead
// of wrapping.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// 4^e as a checked 64-bit value (e <= 31).
int64_t pow4_checked(int64_t e);

struct PrimePower {
  int64_t prime;
  int64_t exponent;
  bool operator==(const PrimePower&) const = default;
};

// Canonical factorization: primes strictly increasing, every exponent >= 1,
// empty list for n = 1.
struct Factorization {
  std::vector<PrimePower> factors;

  int64_t value() const;  // product of prime^exponent, recomputed
};

// Witness for membership in Gamma = {(2k-1) * 2^(2l-1) : k,l >= 1}:
// the pair (k, ell) with n = (2k-1) * 2^(2*ell-1).
struct GammaWitness {
  int64_t k = 0;
  int64_t ell = 0;
  bool operator==(const GammaWitness&) const = default;
};

int64_t gcd(int64_t a, int64_t b);
Factorization factorize(int64_t n);
int64_t euler_phi(int64_t n);
int mobius(int64_t n);
int64_t divisor_count(int64_t n);
int64_t two_adic_valuation(int64_t n);

// (2k-1) * 2^(2*ell-1), checked.
int64_t gamma_value(int64_t k, int64_t ell);

// Present iff the 2-adic valuation of n is odd; the witness reconstructs n.
std::optional<GammaWitness> gamma_membership(int64_t n);

// Branch-free variant of gamma_membership(n).has_value() for hot loops.
bool in_gamma(int64_t n);

}  // namespace olab
