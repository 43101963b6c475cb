#include "olab/density.hpp"

#include <atomic>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace olab {

DensityLimits density_limits() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return {5.0 / (3.0 * pi2), 4.0 / (3.0 * pi2), 10.0 / (3.0 * pi2), 3.0 / pi2};
}

std::vector<int64_t> totient_table(int64_t N) {
  if (N < 1) throw std::invalid_argument("totient_table: N must be >= 1");
  std::vector<int64_t> phi(static_cast<std::size_t>(N) + 1);
  std::iota(phi.begin(), phi.end(), int64_t{0});
  for (int64_t i = 2; i <= N; ++i) {
    if (phi[i] == i) {  // i is prime
      for (int64_t j = i; j <= N; j += i) phi[j] -= phi[j] / i;
    }
  }
  return phi;
}

namespace {

// Counts of coprime pairs p < q in row q, split by the Gamma filter. Rows
// with q in Gamma contribute phi(q) pairs to W_hat outright; elsewhere the
// cheap valuation-parity test runs before the gcd and the W_hat share is the
// row totient minus the W hits.
struct RowCounts {
  int64_t w = 0;
  int64_t w_hat = 0;
};

RowCounts count_row(int64_t q, int64_t phi_q) {
  RowCounts rc;
  if (in_gamma(q)) {
    rc.w_hat = phi_q;
    return rc;
  }
  for (int64_t p = 1; p < q; ++p) {
    if (!in_gamma(p) && std::gcd(p, q) == 1) ++rc.w;
  }
  rc.w_hat = phi_q - rc.w;
  return rc;
}

void fill_ratios(DensityReport& r) {
  const double n2 = static_cast<double>(r.N) * static_cast<double>(r.N);
  r.ratio_W = static_cast<double>(r.count_W) / n2;
  r.ratio_W_hat = static_cast<double>(r.count_W_hat) / n2;
  r.ratio_W_tilde = static_cast<double>(r.count_W_tilde) / n2;
}

}  // namespace

DensityReport enumerate_counts(int64_t N, int jobs) {
  if (N < 1) throw std::invalid_argument("enumerate_counts: N must be >= 1");
  const auto phi = totient_table(N);

  DensityReport r;
  r.N = N;
  for (int64_t n = 1; n <= N; ++n) r.totient_sum += phi[n];

  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (int64_t q = 2; q <= N; ++q) {
      const RowCounts rc = count_row(q, phi[q]);
      r.count_W += rc.w;
      r.count_W_hat += rc.w_hat;
    }
  } else {
    std::atomic<int64_t> next_q{2};
    std::vector<RowCounts> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          const int64_t q = next_q.fetch_add(1);
          if (q > N) return;
          const RowCounts rc = count_row(q, phi[q]);
          partial[w].w += rc.w;
          partial[w].w_hat += rc.w_hat;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const RowCounts& rc : partial) {
      r.count_W += rc.w;
      r.count_W_hat += rc.w_hat;
    }
  }

  // W_tilde is W mirrored across the diagonal plus the single diagonal
  // member (1,1).
  r.count_W_tilde = 2 * r.count_W + 1;
  fill_ratios(r);
  return r;
}

std::vector<DensityReport> density_series(int64_t N_max) {
  if (N_max < 1) throw std::invalid_argument("density_series: N_max must be >= 1");
  const auto phi = totient_table(N_max);
  std::vector<DensityReport> out;
  out.reserve(static_cast<std::size_t>(N_max));
  int64_t w = 0, w_hat = 0, tot = 0;
  for (int64_t N = 1; N <= N_max; ++N) {
    tot += phi[N];
    if (N >= 2) {
      const RowCounts rc = count_row(N, phi[N]);
      w += rc.w;
      w_hat += rc.w_hat;
    }
    DensityReport r;
    r.N = N;
    r.count_W = w;
    r.count_W_hat = w_hat;
    r.count_W_tilde = 2 * w + 1;
    r.totient_sum = tot;
    fill_ratios(r);
    out.push_back(r);
  }
  return out;
}

int64_t coprime_count(int64_t N, int64_t m) {
  if (N < 1 || m < 1) throw std::invalid_argument("coprime_count: arguments must be >= 1");
  std::vector<int64_t> primes;
  for (const auto& [prime, exponent] : factorize(m).factors) primes.push_back(prime);
  int64_t total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    int64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        ++bits;
      }
    }
    total += (bits % 2 == 0 ? 1 : -1) * (N / d);
  }
  return total;
}

CountingSchedule make_counting_schedule(int64_t N) {
  if (N < 1) throw std::invalid_argument("make_counting_schedule: N must be >= 1");
  CountingSchedule s;
  s.k1 = (N + 2) / 4;
  s.ell.reserve(static_cast<std::size_t>(s.k1));
  for (int64_t k = 1; k <= s.k1; ++k) {
    // largest ell with (2k-1) * 2^(2*ell-1) <= N, by doubling
    int64_t ell = 0;
    __int128 v = static_cast<__int128>(2 * k - 1) * 2;
    while (v <= N) {
      ++ell;
      v *= 4;
    }
    s.ell.push_back(ell);
  }
  return s;
}

int64_t count_W_hat_by_formula(int64_t N) {
  const CountingSchedule s = make_counting_schedule(N);
  int64_t total = 0;
  for (int64_t k = 1; k <= s.k1; ++k) {
    int64_t m = (2 * k - 1) * 2;
    for (int64_t ell = 1; ell <= s.ell[k - 1]; ++ell) {
      total += coprime_count(N, m);
      m *= 4;
    }
  }
  return total;
}

OddTotientSum odd_totient_ratio_sum(int64_t N) {
  if (N < 1) throw std::invalid_argument("odd_totient_ratio_sum: N must be >= 1");
  const int64_t M = 2 * N - 1;
  const auto phi = totient_table(M);

  // Common denominator: lcm of all odd m <= M, assembled from prime powers.
  std::vector<int64_t> primes;  // odd primes <= M
  {
    std::vector<bool> composite(static_cast<std::size_t>(M) + 1, false);
    for (int64_t i = 3; i <= M; i += 2) {
      if (composite[i]) continue;
      primes.push_back(i);
      if (i <= M / i) {
        for (int64_t j = i * i; j <= M; j += 2 * i) composite[j] = true;
      }
    }
  }
  BigUint lcm{1};
  std::vector<int64_t> lcm_exponent(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    int64_t pe = primes[i];
    int64_t e = 1;
    while (pe <= M / primes[i]) {
      pe *= primes[i];
      ++e;
    }
    lcm.mul_small(static_cast<std::uint64_t>(pe));
    lcm_exponent[i] = e;
  }

  // numerator over lcm: sum phi(m) * (lcm / m) for odd m
  BigUint numerator;
  BigUint term;
  for (int64_t n = 1; n <= N; ++n) {
    const int64_t m = 2 * n - 1;
    BigUint::exact_div_odd(term, lcm, static_cast<std::uint64_t>(m));
    term.mul_small(static_cast<std::uint64_t>(phi[m]));
    numerator.add(term);
  }

  OddTotientSum out;
  out.denominator = lcm;
  out.denominator.mul_small(static_cast<std::uint64_t>(N));

  // Reduce to lowest terms. The denominator's factorization is known
  // (lcm prime powers times the factors of N), so the gcd comes out of
  // per-prime valuations instead of a general big gcd.
  std::vector<std::pair<int64_t, int64_t>> den_factors;  // (prime, exponent)
  for (std::size_t i = 0; i < primes.size(); ++i) den_factors.emplace_back(primes[i], lcm_exponent[i]);
  for (const auto& [prime, exponent] : factorize(N).factors) {
    bool merged = false;
    for (auto& [dp, de] : den_factors) {
      if (dp == prime) {
        de += exponent;
        merged = true;
        break;
      }
    }
    if (!merged) den_factors.emplace_back(prime, exponent);
  }
  out.numerator = numerator;
  for (const auto& [prime, exponent] : den_factors) {
    for (int64_t e = 0; e < exponent; ++e) {
      if (out.numerator.mod_small(static_cast<std::uint64_t>(prime)) != 0) break;
      out.numerator.divmod_small(static_cast<std::uint64_t>(prime));
      out.denominator.divmod_small(static_cast<std::uint64_t>(prime));
    }
  }

  out.decimal = BigUint::ratio(out.numerator, out.denominator);
  return out;
}

}  // namespace olab
