#include "olab/classifier.hpp"

#include <numeric>
#include <stdexcept>

namespace olab {

ReducedRational ReducedRational::reduce(int64_t a, int64_t b) {
  if (a <= 0 || b <= 0) {
    throw std::invalid_argument("rational requires positive numerator and denominator");
  }
  const int64_t g = std::gcd(a, b);
  return {a / g, b / g};
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::proper_fraction: return "proper_fraction";
    case Regime::unit: return "unit";
    case Regime::reciprocal: return "reciprocal";
  }
  return "?";
}

OverlapClassification classify(int64_t a, int64_t b) {
  OverlapClassification c;
  c.input_p = a;
  c.input_q = b;
  c.t = ReducedRational::reduce(a, b);
  c.gamma_p = gamma_membership(c.t.p);
  c.gamma_q = gamma_membership(c.t.q);
  c.overlap = !c.gamma_p.has_value() && !c.gamma_q.has_value();
  c.regime = c.t.p < c.t.q   ? Regime::proper_fraction
             : c.t.p == c.t.q ? Regime::unit
                              : Regime::reciprocal;
  return c;
}

bool membership_in_W(int64_t p, int64_t q, WVariant variant) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("membership_in_W: p, q must be positive");
  const bool coprime = std::gcd(p, q) == 1;
  const bool p_in = in_gamma(p);
  const bool q_in = in_gamma(q);
  switch (variant) {
    case WVariant::W: return coprime && p < q && !p_in && !q_in;
    case WVariant::W_hat: return coprime && p < q && (p_in || q_in);
    case WVariant::W_tilde: return coprime && !p_in && !q_in;
  }
  throw std::logic_error("unreachable");
}

}  // namespace olab
