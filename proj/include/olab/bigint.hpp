#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace olab {

// Arbitrary-size unsigned integer on little-endian 64-bit limbs.
// Canonical form: no trailing zero limbs, zero is the empty vector.
// Only the operations the density module needs are provided: grow by
// small multiplications, exact division by odd 64-bit values, small
// divmod/mod, addition, decimal rendering.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t limb_count() const { return limbs_.size(); }
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t as_u64() const;  // requires fits_u64()

  void add(const BigUint& other);
  void mul_small(std::uint64_t m);
  std::uint64_t divmod_small(std::uint64_t d);  // in-place quotient, returns remainder
  std::uint64_t mod_small(std::uint64_t d) const;

  // dst = src / d where d is odd and divides src exactly (Jebelean exact
  // division); throws std::logic_error if the division is not exact.
  static void exact_div_odd(BigUint& dst, const BigUint& src, std::uint64_t d);

  static int compare(const BigUint& a, const BigUint& b);
  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }

  // num/den as a double; handles magnitudes far beyond double range as
  // long as the ratio itself is representable.
  static double ratio(const BigUint& num, const BigUint& den);

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

}  // namespace olab
