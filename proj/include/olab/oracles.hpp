#pragma once

#include <array>
#include <optional>
#include <vector>

#include "olab/classifier.hpp"

namespace olab {

// Integer digit set D = q * {0, 3t, 3, 3t+3} = {0, 3p, 3q, 3p+3q},
// strictly increasing for p < q.
struct DigitSet {
  std::array<int64_t, 4> digits;

  static DigitSet for_rational(const ReducedRational& t);
};

// Two distinct equal-length digit blocks whose composed maps send 0 to the
// same point: sum (block_i[n] - block_j[n]) * 4^(depth-n) == 0.
struct OverlapWitness {
  int64_t depth = 0;
  std::vector<int64_t> block_i;
  std::vector<int64_t> block_j;
  bool operator==(const OverlapWitness&) const = default;
};

struct WitnessSearchOutcome {
  std::optional<OverlapWitness> witness;
  std::vector<int64_t> visited_states;  // sorted, includes the start state 0
  bool exhausted = false;               // state space saturated before the depth cap
};

// 2(p+q)+1: at least the number of reachable difference states, so a search
// to this depth is a decision procedure.
int64_t default_search_depth(const ReducedRational& t);

// Breadth-first search over difference states s -> 4s + (a - b) with
// |s| <= p+q, first digit pair forced unequal. Returns the lexicographically
// least minimal-depth witness, if any exists within max_depth.
WitnessSearchOutcome search_overlap_witness(const ReducedRational& t, int64_t max_depth);
std::optional<OverlapWitness> find_overlap_witness(const ReducedRational& t, int64_t max_depth);

// tau_ell = 2^(2*ell - 1), checked.
int64_t tau(int64_t ell);

// True iff (1 + x^tau_ell) divides (1 + x^3p + x^3q + x^(3p+3q)), decided by
// folding exponents modulo x^tau + 1. Requires tau_ell <= 3p+3q.
bool check_polynomial_divisibility(int64_t p, int64_t q, int64_t ell);

// Smallest ell whose divisor splits the digit polynomial, scanning every
// ell with tau_ell <= 3p+3q; absent means C_t has an exact overlap.
std::optional<int64_t> no_overlap_by_divisibility(const ReducedRational& t);

// The linear system whose solvability mirrors the division: column n of A is
// the coefficient vector of x^(n-1) (1 + x^tau_ell); the augmented column is
// the coefficient vector of 1 + x^3p + x^3q + x^(3p+3q).
struct CoefficientMatrix {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<int64_t> entries;    // row-major rows x cols
  std::vector<int64_t> augmented;  // size rows

  int64_t at(int64_t r, int64_t c) const { return entries[r * cols + c]; }
};

CoefficientMatrix build_rank_instance(int64_t p, int64_t q, int64_t ell);

// Rank of an integer matrix by fraction-free (Bareiss) elimination; all
// intermediate values stay integral.
int64_t integer_matrix_rank(std::vector<int64_t> m, int64_t rows, int64_t cols);

// rank(A | b) == rank(A) for the instance above.
bool rank_equality_holds(int64_t p, int64_t q, int64_t ell);

// Cross-validation sweep over all coprime p < q with p + q <= max_sum,
// ordered by (p+q, p).
struct OracleVerdict {
  int64_t p = 0;
  int64_t q = 0;
  bool classifier_overlap = false;
  bool witness_found = false;
  bool divisibility_overlap = false;
  std::optional<bool> rank_overlap;

  bool agree() const;
};

std::vector<OracleVerdict> verify_pairs(int64_t max_sum, bool include_rank, int jobs = 1);

}  // namespace olab
