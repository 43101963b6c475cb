#include "olab/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace olab {

DigitSet DigitSet::for_rational(const ReducedRational& t) {
  if (t.p >= t.q) throw std::invalid_argument("digit set requires p < q");
  if (std::gcd(t.p, t.q) != 1) throw std::invalid_argument("digit set requires coprime p, q");
  const int64_t a = checked_mul(3, t.p);
  const int64_t b = checked_mul(3, t.q);
  return {{0, a, b, checked_add(a, b)}};
}

int64_t default_search_depth(const ReducedRational& t) {
  return checked_add(checked_mul(2, checked_add(t.p, t.q)), 1);
}

namespace {

struct SearchNode {
  int64_t pred_state = 0;  // difference state this one was discovered from
  int32_t depth = 0;
  int8_t digit_i = 0;  // digit indices of the edge that discovered this state
  int8_t digit_j = 0;
  bool seen = false;
};

}  // namespace

WitnessSearchOutcome search_overlap_witness(const ReducedRational& t, int64_t max_depth) {
  if (max_depth < 1) throw std::invalid_argument("witness search requires max_depth >= 1");
  const DigitSet ds = DigitSet::for_rational(t);
  const int64_t bound = checked_add(t.p, t.q);
  checked_mul(bound, 8);  // overflow probe: transitions stay within 7*bound

  // A state s with |s| > p+q can never return to 0: |4s + delta| >= 4|s| - 3(p+q) > |s|.
  const int64_t num_states = 2 * bound + 1;
  const auto index_of = [bound](int64_t s) { return s + bound; };

  std::vector<SearchNode> nodes(static_cast<std::size_t>(num_states));
  nodes[index_of(0)].seen = true;  // the start; reaching it again is the goal

  WitnessSearchOutcome out;
  std::vector<int64_t> frontier;
  std::vector<int64_t> next;

  const auto reconstruct = [&](int64_t parent_state, int depth, int ai, int bi) {
    OverlapWitness w;
    w.depth = depth;
    w.block_i.assign(depth, 0);
    w.block_j.assign(depth, 0);
    w.block_i[depth - 1] = ds.digits[ai];
    w.block_j[depth - 1] = ds.digits[bi];
    int64_t s = parent_state;
    for (int d = depth - 1; d >= 1; --d) {
      const SearchNode& n = nodes[index_of(s)];
      w.block_i[d - 1] = ds.digits[n.digit_i];
      w.block_j[d - 1] = ds.digits[n.digit_j];
      s = n.pred_state;
    }
    return w;
  };

  // depth 1: the first digit pair must differ, so the state cannot be 0
  for (int ai = 0; ai < 4; ++ai) {
    for (int bi = 0; bi < 4; ++bi) {
      if (ai == bi) continue;
      const int64_t s = ds.digits[ai] - ds.digits[bi];
      if (s < -bound || s > bound) continue;
      SearchNode& n = nodes[index_of(s)];
      if (n.seen) continue;
      n = {0, 1, static_cast<int8_t>(ai), static_cast<int8_t>(bi), true};
      frontier.push_back(s);
    }
  }

  int64_t depth = 1;
  while (!out.witness && !frontier.empty() && depth < max_depth) {
    ++depth;
    next.clear();
    for (const int64_t s : frontier) {
      for (int ai = 0; ai < 4; ++ai) {
        for (int bi = 0; bi < 4; ++bi) {
          const int64_t s2 = 4 * s + ds.digits[ai] - ds.digits[bi];
          if (s2 == 0) {
            out.witness = reconstruct(s, static_cast<int>(depth), ai, bi);
            goto done;
          }
          if (s2 < -bound || s2 > bound) continue;
          SearchNode& n = nodes[index_of(s2)];
          if (n.seen) continue;
          n = {s, static_cast<int32_t>(depth), static_cast<int8_t>(ai),
               static_cast<int8_t>(bi), true};
          next.push_back(s2);
        }
      }
    }
    frontier.swap(next);
  }
done:
  out.exhausted = !out.witness && frontier.empty();
  for (int64_t s = -bound; s <= bound; ++s) {
    if (nodes[index_of(s)].seen) out.visited_states.push_back(s);
  }
  return out;
}

std::optional<OverlapWitness> find_overlap_witness(const ReducedRational& t, int64_t max_depth) {
  return search_overlap_witness(t, max_depth).witness;
}

int64_t tau(int64_t ell) {
  if (ell < 1) throw std::invalid_argument("tau: ell must be >= 1");
  return pow4_checked(ell) / 2;
}

bool check_polynomial_divisibility(int64_t p, int64_t q, int64_t ell) {
  if (p < 1 || q < 1 || p >= q) throw std::invalid_argument("divisibility check requires 1 <= p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("divisibility check requires coprime p, q");
  const int64_t degree = checked_mul(3, checked_add(p, q));
  const int64_t step = tau(ell);
  if (step > degree) {
    throw std::invalid_argument("divisor degree exceeds dividend degree");
  }
  // Fold x^e modulo x^step + 1: exponent e maps to e mod step with sign
  // (-1)^(e / step). Divisibility holds iff everything cancels.
  std::vector<int64_t> residue(static_cast<std::size_t>(step), 0);
  for (const int64_t e : {int64_t{0}, 3 * p, 3 * q, degree}) {
    residue[e % step] += (e / step) % 2 == 0 ? 1 : -1;
  }
  return std::all_of(residue.begin(), residue.end(), [](int64_t c) { return c == 0; });
}

std::optional<int64_t> no_overlap_by_divisibility(const ReducedRational& t) {
  const int64_t degree = checked_mul(3, checked_add(t.p, t.q));
  for (int64_t ell = 1; tau(ell) <= degree; ++ell) {
    if (check_polynomial_divisibility(t.p, t.q, ell)) return ell;
  }
  return std::nullopt;
}

CoefficientMatrix build_rank_instance(int64_t p, int64_t q, int64_t ell) {
  if (p < 1 || q < 1 || p >= q) throw std::invalid_argument("rank instance requires 1 <= p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("rank instance requires coprime p, q");
  const int64_t degree = checked_mul(3, checked_add(p, q));
  const int64_t step = tau(ell);
  if (step > degree) throw std::invalid_argument("divisor degree exceeds dividend degree");

  CoefficientMatrix m;
  m.rows = degree + 1;
  m.cols = degree - step + 1;
  m.entries.assign(static_cast<std::size_t>(checked_mul(m.rows, m.cols)), 0);
  for (int64_t n = 0; n < m.cols; ++n) {
    m.entries[n * m.cols + n] = 1;
    m.entries[(n + step) * m.cols + n] = 1;
  }
  m.augmented.assign(static_cast<std::size_t>(m.rows), 0);
  m.augmented[0] = 1;
  m.augmented[3 * p] = 1;
  m.augmented[3 * q] = 1;
  m.augmented[degree] = 1;
  return m;
}

int64_t integer_matrix_rank(std::vector<int64_t> m, int64_t rows, int64_t cols) {
  if (rows < 0 || cols < 0 || m.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("integer_matrix_rank: bad dimensions");
  }
  int64_t rank = 0;
  int64_t prev_pivot = 1;
  for (int64_t col = 0; col < cols && rank < rows; ++col) {
    int64_t pivot_row = -1;
    for (int64_t r = rank; r < rows; ++r) {
      if (m[r * cols + col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      for (int64_t c = col; c < cols; ++c) std::swap(m[pivot_row * cols + c], m[rank * cols + c]);
    }
    const int64_t pivot = m[rank * cols + col];
    for (int64_t r = rank + 1; r < rows; ++r) {
      const int64_t head = m[r * cols + col];
      // with unit pivots and a zero head the fraction-free update is the identity
      if (head == 0 && pivot == 1 && prev_pivot == 1) continue;
      for (int64_t c = col + 1; c < cols; ++c) {
        // fraction-free update: every entry stays a minor of the input,
        // and the division by the previous pivot is exact
        __int128 value = static_cast<__int128>(m[r * cols + c]) * pivot -
                         static_cast<__int128>(head) * m[rank * cols + c];
        if (prev_pivot == -1) {
          value = -value;
        } else if (prev_pivot != 1) {
          value /= prev_pivot;
        }
        if (value > INT64_MAX || value < INT64_MIN) {
          throw std::overflow_error("integer_matrix_rank: entry exceeds 64 bits");
        }
        m[r * cols + c] = static_cast<int64_t>(value);
      }
      m[r * cols + col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

bool rank_equality_holds(int64_t p, int64_t q, int64_t ell) {
  const CoefficientMatrix inst = build_rank_instance(p, q, ell);
  const int64_t plain = integer_matrix_rank(inst.entries, inst.rows, inst.cols);

  std::vector<int64_t> augmented(static_cast<std::size_t>(inst.rows * (inst.cols + 1)));
  for (int64_t r = 0; r < inst.rows; ++r) {
    std::copy_n(inst.entries.begin() + r * inst.cols, inst.cols,
                augmented.begin() + r * (inst.cols + 1));
    augmented[r * (inst.cols + 1) + inst.cols] = inst.augmented[r];
  }
  return integer_matrix_rank(std::move(augmented), inst.rows, inst.cols + 1) == plain;
}

bool OracleVerdict::agree() const {
  if (classifier_overlap != witness_found) return false;
  if (classifier_overlap != divisibility_overlap) return false;
  if (rank_overlap && classifier_overlap != *rank_overlap) return false;
  return true;
}

std::vector<OracleVerdict> verify_pairs(int64_t max_sum, bool include_rank, int jobs) {
  std::vector<std::pair<int64_t, int64_t>> pairs;
  for (int64_t sum = 3; sum <= max_sum; ++sum) {
    for (int64_t p = 1; 2 * p < sum; ++p) {
      if (std::gcd(p, sum - p) == 1) pairs.emplace_back(p, sum - p);
    }
  }

  std::vector<OracleVerdict> verdicts(pairs.size());
  const auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [p, q] = pairs[i];
      const ReducedRational t{p, q};
      OracleVerdict& v = verdicts[i];
      v.p = p;
      v.q = q;
      v.classifier_overlap = classify(p, q).overlap;
      v.witness_found = find_overlap_witness(t, default_search_depth(t)).has_value();
      v.divisibility_overlap = !no_overlap_by_divisibility(t).has_value();
      if (include_rank) {
        const int64_t degree = 3 * (p + q);
        bool any = false;
        for (int64_t ell = 1; tau(ell) <= degree && !any; ++ell) {
          any = rank_equality_holds(p, q, ell);
        }
        v.rank_overlap = !any;
      }
    }
  };

  const int workers = std::max(1, jobs);
  if (workers == 1 || pairs.size() < 2) {
    run(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(pairs.size(), w * chunk);
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return verdicts;
}

}  // namespace olab
