#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffproj/errors.hpp"

namespace ffproj {

// Unsigned arbitrary-precision integer, sized for exact comparisons of
// products and powers that overflow 64 bits.  Little-endian 64-bit limbs.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(v);
  }

  bool is_zero() const { return limbs_.empty(); }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t top = 64;
    std::uint64_t hi = limbs_.back();
    while (!(hi >> 63)) {
      hi <<= 1;
      --top;
    }
    return (limbs_.size() - 1) * 64 + top;
  }

  std::optional<std::uint64_t> to_u64() const {
    if (limbs_.size() > 1) return std::nullopt;
    return limbs_.empty() ? 0 : limbs_[0];
  }

  // -1, 0, 1 for <, ==, >.
  int compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

  BigUint operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 carry = 0;
      for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
        unsigned __int128 cur = (unsigned __int128)limbs_[i] * o.limbs_[j] +
                                r.limbs_[i + j] + carry;
        r.limbs_[i + j] = (std::uint64_t)cur;
        carry = cur >> 64;
      }
      std::size_t k = i + o.limbs_.size();
      while (carry) {
        unsigned __int128 cur = (unsigned __int128)r.limbs_[k] + carry;
        r.limbs_[k] = (std::uint64_t)cur;
        carry = cur >> 64;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

  BigUint operator+(const BigUint& o) const {
    BigUint r;
    std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.assign(n + 1, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned __int128 cur = carry;
      if (i < limbs_.size()) cur += limbs_[i];
      if (i < o.limbs_.size()) cur += o.limbs_[i];
      r.limbs_[i] = (std::uint64_t)cur;
      carry = cur >> 64;
    }
    r.limbs_[n] = (std::uint64_t)carry;
    r.trim();
    return r;
  }

  static BigUint pow(const BigUint& base, std::uint64_t exp) {
    BigUint r(1), b = base;
    while (exp) {
      if (exp & 1) r *= b;
      exp >>= 1;
      if (exp) b *= b;
    }
    return r;
  }

  static BigUint pow(std::uint64_t base, std::uint64_t exp) {
    return pow(BigUint(base), exp);
  }

  // base^exp, abandoned (nullopt) as soon as the result is known to exceed
  // max_bits bits.  Exact: never gives up on a result that fits.
  static std::optional<BigUint> pow_capped(std::uint64_t base,
                                           const BigUint& exp,
                                           std::size_t max_bits) {
    if (base == 0) return BigUint(exp.is_zero() ? 1 : 0);
    if (base == 1 || exp.is_zero()) return BigUint(1);
    // bits(base^exp) > exp * (bits(base) - 1), so a quick reject first.
    BigUint floor_log(std::uint64_t(BigUint(base).bit_length() - 1));
    if (!floor_log.is_zero() && exp * floor_log > BigUint(max_bits))
      return std::nullopt;
    auto e = exp.to_u64();
    if (!e) return std::nullopt;  // base >= 2 and exp >= 2^64 never fits
    BigUint r(1), b(base);
    std::uint64_t k = *e;
    while (k) {
      if (k & 1) {
        r *= b;
        if (r.bit_length() > max_bits) return std::nullopt;
      }
      k >>= 1;
      if (k) {
        b *= b;
        if (b.bit_length() > max_bits + 64) return std::nullopt;
      }
    }
    if (r.bit_length() > max_bits) return std::nullopt;
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      unsigned __int128 rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | work[i];
        work[i] = (std::uint64_t)(cur / 1000000000000000000ULL);
        rem = cur % 1000000000000000000ULL;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string((std::uint64_t)rem);
      if (work.empty()) {
        out = chunk + out;
      } else {
        out = std::string(18 - chunk.size(), '0') + chunk + out;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

}  // namespace ffproj
