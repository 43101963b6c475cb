#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "olab/classifier.hpp"

using namespace olab;

TEST_CASE("reduction to lowest terms") {
  CHECK(ReducedRational::reduce(2, 4) == ReducedRational{1, 2});
  CHECK(ReducedRational::reduce(1, 11) == ReducedRational{1, 11});
  CHECK(ReducedRational::reduce(6, 4) == ReducedRational{3, 2});
  CHECK(ReducedRational::reduce(7, 7) == ReducedRational{1, 1});
  CHECK_THROWS_AS(ReducedRational::reduce(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ReducedRational::reduce(3, 0), std::invalid_argument);
}

TEST_CASE("classify the overlap family member t = 1/11") {
  const OverlapClassification c = classify(1, 11);
  CHECK(c.overlap);
  CHECK_FALSE(c.gamma_p.has_value());
  CHECK_FALSE(c.gamma_q.has_value());
  CHECK(c.regime == Regime::proper_fraction);
}

TEST_CASE("classify t = 1/2: open set condition, no overlap") {
  const OverlapClassification c = classify(1, 2);
  CHECK_FALSE(c.overlap);
  CHECK_FALSE(c.gamma_p.has_value());
  REQUIRE(c.gamma_q.has_value());
  CHECK(*c.gamma_q == GammaWitness{1, 1});
}

TEST_CASE("classify reduces its input") {
  const OverlapClassification c = classify(2, 4);
  CHECK(c.input_p == 2);
  CHECK(c.input_q == 4);
  CHECK(c.t == ReducedRational{1, 2});
  CHECK_FALSE(c.overlap);
}

TEST_CASE("classify t = 1/3 has an overlap") {
  CHECK(classify(1, 3).overlap);
}

TEST_CASE("t = 1 is the unit regime and overlaps") {
  const OverlapClassification c = classify(1, 1);
  CHECK(c.regime == Regime::unit);
  CHECK(c.overlap);
  const OverlapClassification c2 = classify(5, 5);
  CHECK(c2.regime == Regime::unit);
  CHECK(c2.t == ReducedRational{1, 1});
  CHECK(c2.overlap);
}

TEST_CASE("reciprocal regime matches the flipped classification") {
  const OverlapClassification c = classify(11, 1);
  CHECK(c.regime == Regime::reciprocal);
  CHECK(c.overlap == classify(1, 11).overlap);
  for (int64_t a = 1; a <= 200; ++a) {
    for (int64_t b = 1; b <= 200; ++b) {
      CHECK(classify(a, b).overlap == classify(b, a).overlap);
    }
  }
}

TEST_CASE("classify rejects zero") {
  CHECK_THROWS_AS(classify(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(classify(5, 0), std::invalid_argument);
}

TEST_CASE("overlap iff both gamma witnesses absent") {
  for (int64_t a = 1; a <= 120; ++a) {
    for (int64_t b = 1; b <= 120; ++b) {
      const OverlapClassification c = classify(a, b);
      CHECK(c.overlap == (!c.gamma_p.has_value() && !c.gamma_q.has_value()));
    }
  }
}

TEST_CASE("membership examples") {
  CHECK(membership_in_W(1, 11, WVariant::W));
  CHECK(membership_in_W(1, 2, WVariant::W_hat));
  CHECK(membership_in_W(11, 1, WVariant::W_tilde));
  CHECK_FALSE(membership_in_W(11, 1, WVariant::W));
  CHECK(membership_in_W(1, 1, WVariant::W_tilde));
  CHECK_FALSE(membership_in_W(2, 4, WVariant::W));      // not coprime
  CHECK_FALSE(membership_in_W(2, 4, WVariant::W_hat));  // not coprime
}

TEST_CASE("W and W_hat partition the coprime pairs below the diagonal") {
  for (int64_t q = 2; q <= 500; ++q) {
    for (int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const bool in_w = membership_in_W(p, q, WVariant::W);
      const bool in_w_hat = membership_in_W(p, q, WVariant::W_hat);
      CHECK(in_w != in_w_hat);
    }
  }
}

TEST_CASE("W_tilde is symmetric") {
  for (int64_t p = 1; p <= 200; ++p) {
    for (int64_t q = 1; q <= 200; ++q) {
      CHECK(membership_in_W(p, q, WVariant::W_tilde) == membership_in_W(q, p, WVariant::W_tilde));
    }
  }
}

TEST_CASE("classification agrees with W membership of the ordered pair") {
  for (int64_t p = 1; p <= 200; ++p) {
    for (int64_t q = 1; q <= 200; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const int64_t lo = std::min(p, q);
      const int64_t hi = std::max(p, q);
      CHECK(classify(p, q).overlap == membership_in_W(lo, hi, WVariant::W));
    }
  }
}
