#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgs {

// Unsigned integer of arbitrary size.  Group orders overflow 64 bits well
// within desk scale (|Sym(64)| already does), and the search control flow
// compares such orders exactly, so estimates carry one of these.
class BigNat {
public:
  BigNat() = default;  // zero
  BigNat(std::uint64_t v) {
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  static BigNat factorial(unsigned n) {
    BigNat r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul(i);
    return r;
  }

  BigNat& mul(std::uint64_t m) {
    if (m == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    const std::uint32_t lo = static_cast<std::uint32_t>(m & 0xffffffffu);
    const std::uint32_t hi = static_cast<std::uint32_t>(m >> 32);
    BigNat result = mul_u32(lo);
    if (hi != 0) {
      BigNat high = mul_u32(hi);
      high.limbs_.insert(high.limbs_.begin(), 0);  // shift by one limb
      result.add(high);
    }
    *this = std::move(result);
    return *this;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigNat::as_u64: value too large");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i > 0; --i) v = (v << 32) | limbs_[i - 1];
    return v;
  }

  friend bool operator==(const BigNat&, const BigNat&) = default;

  std::strong_ordering operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i > 0; --i) {
      if (limbs_[i - 1] != o.limbs_[i - 1]) return limbs_[i - 1] <=> o.limbs_[i - 1];
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      // divide by 10^9, collecting the remainder as the next chunk
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i > 0; --i) {
        std::uint64_t cur = (rem << 32) | work[i - 1];
        work[i - 1] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (!work.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
      out = chunk + out;
    }
    return out;
  }

private:
  BigNat mul_u32(std::uint32_t m) const {
    BigNat r;
    if (m == 0 || is_zero()) return r;
    r.limbs_.resize(limbs_.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * m + carry;
      r.limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    r.limbs_[limbs_.size()] = static_cast<std::uint32_t>(carry);
    while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
    return r;
  }

  void add(const BigNat& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
      limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  std::vector<std::uint32_t> limbs_;  // little endian, no trailing zeros
};

}  // namespace dgs
