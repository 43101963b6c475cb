#pragma once

#include <optional>

#include "olab/numtheory.hpp"

namespace olab {

// t = p/q in lowest terms, both positive. The only parameter of C_t.
struct ReducedRational {
  int64_t p = 1;
  int64_t q = 1;

  // Reduces any positive pair (a, b) by its gcd.
  static ReducedRational reduce(int64_t a, int64_t b);
  bool operator==(const ReducedRational&) const = default;
};

enum class Regime { proper_fraction, unit, reciprocal };

const char* regime_name(Regime r);

// Verdict of the overlap characterization: C_t has an exact overlap exactly
// when neither the reduced numerator nor the reduced denominator lies in
// Gamma. For p > q the verdict coincides with the reciprocal 1/t, and the
// degenerate t = 1 always overlaps (f_3t and f_3 are the same map).
struct OverlapClassification {
  int64_t input_p = 0;
  int64_t input_q = 0;
  ReducedRational t;
  bool overlap = false;
  std::optional<GammaWitness> gamma_p;
  std::optional<GammaWitness> gamma_q;
  Regime regime = Regime::proper_fraction;
};

OverlapClassification classify(int64_t a, int64_t b);

enum class WVariant {
  W,        // overlap pairs with p < q
  W_hat,    // no-overlap pairs with p < q
  W_tilde,  // overlap pairs, unordered
};

bool membership_in_W(int64_t p, int64_t q, WVariant variant);

}  // namespace olab
