#pragma once

#include <cstdint>
#include <vector>

#include "olab/oracles.hpp"

namespace olab {

// Reduced fraction with positive denominator.
struct Rational64 {
  int64_t num = 0;
  int64_t den = 1;

  static Rational64 reduce(int64_t num, int64_t den);
  bool operator==(const Rational64&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Level-n picture of C_t: the distinct values v = sum d_m 4^(n-m) over digit
// blocks, so the real left endpoints are v / (q 4^n) and every cylinder has
// length (1+t)/4^n.
struct LevelApproximation {
  ReducedRational t;
  int64_t level = 0;
  std::vector<int64_t> endpoints;  // sorted, deduplicated, scaled by q*4^n
  Rational64 interval_length;      // (p+q) / (q * 4^n)
};

LevelApproximation level_endpoints(const ReducedRational& t, int64_t n);

struct MeasureEstimate {
  int64_t level = 0;
  Rational64 measure;          // exact Lebesgue measure of the level-n union
  int64_t endpoint_count = 0;  // D_n
  double dim_estimate = 0.0;   // log(D_n) / (n log 4)
};

MeasureEstimate measure_and_dimension(const ReducedRational& t, int64_t n);

// Boolean grid of W_tilde over [1,N]^2: row-major, q increasing downward,
// p increasing rightward.
struct WGrid {
  int64_t N = 0;
  std::vector<std::uint8_t> cells;

  bool at(int64_t p, int64_t q) const { return cells[(q - 1) * N + (p - 1)] != 0; }
  int64_t true_count() const;
};

WGrid render_W_grid(int64_t N, int jobs = 1);

}  // namespace olab
