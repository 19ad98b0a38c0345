#pragma once

#include <cstdint>

namespace dgs {

// Counter-based PRNG (splitmix64 of seed and counter).  One 64-bit seed
// reproduces every stream, on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1))) {}

  std::uint64_t next() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform-ish integer in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  template <typename T>
  void shuffle(T& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace dgs
