#pragma once

#include <vector>

#include "olab/bigint.hpp"
#include "olab/numtheory.hpp"

namespace olab {

// Reference limits: densities of W, W_hat, W_tilde in [1,N]^2 and of the
// totient summatory ratio.
struct DensityLimits {
  double w;        // 5 / (3 pi^2)
  double w_hat;    // 4 / (3 pi^2)
  double w_tilde;  // 10 / (3 pi^2)
  double totient;  // 3 / pi^2
};

DensityLimits density_limits();

struct DensityReport {
  int64_t N = 0;
  int64_t count_W = 0;
  int64_t count_W_hat = 0;
  int64_t count_W_tilde = 0;
  int64_t totient_sum = 0;  // sum of phi(n) for n <= N
  double ratio_W = 0.0;
  double ratio_W_hat = 0.0;
  double ratio_W_tilde = 0.0;
};

// phi(1..N) by sieve; index 0 unused.
std::vector<int64_t> totient_table(int64_t N);

// Exact counts over [1,N]^2 by direct enumeration of coprime pairs.
DensityReport enumerate_counts(int64_t N, int jobs = 1);

// Reports for every N in [1, N_max], built incrementally row by row.
std::vector<DensityReport> density_series(int64_t N_max);

// #{1 <= n <= N : gcd(n, m) = 1} via the Mobius sum over squarefree
// divisors of m.
int64_t coprime_count(int64_t N, int64_t m);

// k1 = floor((N+2)/4) and, for each k <= k1, the largest ell with
// (2k-1) * 2^(2*ell-1) <= N. Computed by integer shifts only.
struct CountingSchedule {
  int64_t k1 = 0;
  std::vector<int64_t> ell;  // ell[k-1] for k in [1, k1]
};

CountingSchedule make_counting_schedule(int64_t N);

// #(W_hat in [1,N]^2) as the double sum of coprime counts over the
// schedule; agrees exactly with direct enumeration.
int64_t count_W_hat_by_formula(int64_t N);

// (1/N) * sum_{n<=N} phi(2n-1)/(2n-1), exact and as a double.
struct OddTotientSum {
  BigUint numerator;    // lowest terms
  BigUint denominator;
  double decimal = 0.0;
};

OddTotientSum odd_totient_ratio_sum(int64_t N);

}  // namespace olab
