#include "olab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace olab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
  if (v != 0) limbs_.push_back(v);
}

u64 BigUint::as_u64() const {
  if (limbs_.size() > 1) throw std::logic_error("BigUint does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::add(const BigUint& other) {
  const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(n, 0);
  unsigned carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    u128 s = static_cast<u128>(limbs_[i]) + (i < other.limbs_.size() ? other.limbs_[i] : 0) + carry;
    limbs_[i] = static_cast<u64>(s);
    carry = static_cast<unsigned>(s >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

void BigUint::mul_small(u64 m) {
  if (m == 0 || is_zero()) {
    limbs_.clear();
    return;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 t = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(t);
    carry = static_cast<u64>(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

u64 BigUint::divmod_small(u64 d) {
  if (d == 0) throw std::invalid_argument("BigUint: division by zero");
  u64 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
    limbs_[i] = static_cast<u64>(cur / d);
    rem = static_cast<u64>(cur % d);
  }
  trim();
  return rem;
}

u64 BigUint::mod_small(u64 d) const {
  if (d == 0) throw std::invalid_argument("BigUint: division by zero");
  u64 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
    rem = static_cast<u64>(cur % d);
  }
  return rem;
}

namespace {

// Inverse of odd m modulo 2^64 by Newton lifting: x_{k+1} = x_k (2 - m x_k)
// doubles the number of correct low bits; m itself is correct to 3 bits.
u64 inverse_mod_2_64(u64 m) {
  u64 x = m;
  for (int i = 0; i < 5; ++i) x *= 2 - m * x;
  return x;
}

}  // namespace

void BigUint::exact_div_odd(BigUint& dst, const BigUint& src, u64 d) {
  if ((d & 1) == 0) throw std::invalid_argument("exact_div_odd: divisor must be odd");
  dst.limbs_.resize(src.limbs_.size());
  const u64 inv = inverse_mod_2_64(d);
  u64 borrow = 0;
  for (std::size_t i = 0; i < src.limbs_.size(); ++i) {
    const u64 t = src.limbs_[i] - borrow;
    const unsigned under = src.limbs_[i] < borrow ? 1u : 0u;
    const u64 q = t * inv;
    dst.limbs_[i] = q;
    borrow = static_cast<u64>((static_cast<u128>(q) * d) >> 64) + under;
  }
  if (borrow != 0) throw std::logic_error("exact_div_odd: division was not exact");
  dst.trim();
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

double BigUint::ratio(const BigUint& num, const BigUint& den) {
  if (den.is_zero()) throw std::invalid_argument("BigUint::ratio: zero denominator");
  if (num.is_zero()) return 0.0;
  // Leading 128 bits of each operand as long double plus a base-2^64 exponent.
  auto head = [](const BigUint& x, long& exp64) {
    const auto& l = x.limbs_;
    long double h = static_cast<long double>(l.back());
    if (l.size() >= 2) h = h * 18446744073709551616.0L + static_cast<long double>(l[l.size() - 2]);
    exp64 = static_cast<long>(l.size()) - (l.size() >= 2 ? 2 : 1);
    return h;
  };
  long en = 0, ed = 0;
  const long double hn = head(num, en);
  const long double hd = head(den, ed);
  const long double r = hn / hd;
  return static_cast<double>(std::ldexp(r, static_cast<int>(64 * (en - ed))));
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::vector<u64> groups;  // base 10^19 digits, little-endian
  while (!tmp.is_zero()) {
    groups.push_back(tmp.divmod_small(10000000000000000000ull));
  }
  std::string out = std::to_string(groups.back());
  char buf[20];
  for (std::size_t i = groups.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(groups[i]));
    out += buf;
  }
  return out;
}

}  // namespace olab
