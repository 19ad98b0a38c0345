#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dgs {

// A permutation of {0, ..., n-1}, stored by its image list.  Points are
// 0-based internally and rendered 1-based by the cycle-notation printer
// and parser.
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int pt) const { return images_[static_cast<std::size_t>(pt)]; }
  int operator[](int pt) const { return image(pt); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int smallest_moved_point() const;  // -1 if identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }
  std::size_t hash() const;

  // Cycle notation, 1-based, e.g. "(1,2)(3,6,5)"; the identity is "()".
  std::string str() const;
  static Permutation parse(const std::string& text, int degree);

private:
  Permutation() = default;
  std::vector<int> images_;
};

// Composition applying p first, then q: x^(p*q) = (x^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);

// q^-1 * p * q, the conjugate of p by q (acts as p does, on relabelled points).
Permutation conjugate(const Permutation& p, const Permutation& q);

}  // namespace dgs
