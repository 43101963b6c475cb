#include "olab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace olab {

Rational64 Rational64::reduce(int64_t num, int64_t den) {
  if (den <= 0) throw std::invalid_argument("Rational64: denominator must be positive");
  if (num < 0) throw std::invalid_argument("Rational64: negative values not supported");
  const int64_t g = num == 0 ? den : std::gcd(num, den);
  return {num / g, den / g};
}

LevelApproximation level_endpoints(const ReducedRational& t, int64_t n) {
  if (n < 1) throw std::invalid_argument("level_endpoints: level must be >= 1");
  const DigitSet ds = DigitSet::for_rational(t);
  // width precondition: (3p+3q) * 4^n must stay in 64 bits
  checked_mul(ds.digits[3], pow4_checked(n));

  std::vector<int64_t> values{0};
  std::vector<int64_t> next;
  for (int64_t m = 1; m <= n; ++m) {
    next.clear();
    next.reserve(values.size() * 4);
    for (const int64_t v : values) {
      for (const int64_t d : ds.digits) next.push_back(4 * v + d);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    values.swap(next);
  }

  LevelApproximation out;
  out.t = t;
  out.level = n;
  out.endpoints = std::move(values);
  out.interval_length = Rational64::reduce(t.p + t.q, checked_mul(t.q, pow4_checked(n)));
  return out;
}

MeasureEstimate measure_and_dimension(const ReducedRational& t, int64_t n) {
  const LevelApproximation la = level_endpoints(t, n);
  // scaled by q*4^n every cylinder is [v, v + p + q]
  const int64_t len = t.p + t.q;
  int64_t covered = 0;
  int64_t start = la.endpoints.front();
  int64_t end = start + len;
  for (std::size_t i = 1; i < la.endpoints.size(); ++i) {
    const int64_t v = la.endpoints[i];
    if (v > end) {
      covered += end - start;
      start = v;
    }
    end = v + len;
  }
  covered += end - start;

  MeasureEstimate out;
  out.level = n;
  out.measure = Rational64::reduce(covered, checked_mul(t.q, pow4_checked(n)));
  out.endpoint_count = static_cast<int64_t>(la.endpoints.size());
  out.dim_estimate = std::log(static_cast<double>(out.endpoint_count)) /
                     (static_cast<double>(n) * std::log(4.0));
  return out;
}

int64_t WGrid::true_count() const {
  int64_t c = 0;
  for (const std::uint8_t v : cells) c += v;
  return c;
}

WGrid render_W_grid(int64_t N, int jobs) {
  if (N < 1) throw std::invalid_argument("render_W_grid: N must be >= 1");
  WGrid g;
  g.N = N;
  g.cells.assign(static_cast<std::size_t>(checked_mul(N, N)), 0);

  const auto fill_rows = [&](int64_t q_begin, int64_t q_end) {
    for (int64_t q = q_begin; q < q_end; ++q) {
      const bool q_in = in_gamma(q);
      std::uint8_t* row = g.cells.data() + (q - 1) * N;
      if (q_in) continue;  // whole row excluded
      for (int64_t p = 1; p <= N; ++p) {
        if (!in_gamma(p) && std::gcd(p, q) == 1) row[p - 1] = 1;
      }
    }
  };

  const int workers = std::max(1, jobs);
  if (workers == 1 || N < 2) {
    fill_rows(1, N + 1);
  } else {
    std::vector<std::thread> pool;
    const int64_t chunk = (N + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int64_t begin = 1 + w * chunk;
      const int64_t end = std::min(N + 1, begin + chunk);
      if (begin < end) pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return g;
}

}  // namespace olab
