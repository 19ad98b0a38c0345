#include "dgs/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dgs {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return i;
  return -1;
}

std::size_t Permutation::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int x : images_) h = h * 1099511628211ull + static_cast<std::size_t>(x) + 1;
  return h;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      done[static_cast<std::size_t>(x)] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = images_[static_cast<std::size_t>(x)];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  Permutation result(degree);
  std::vector<int>& images = result.images_;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("Permutation::parse: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Permutation::parse: expected point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw std::invalid_argument("Permutation::parse: point out of range");
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("Permutation::parse: unterminated cycle");
    ++i;  // ')'
    any_cycle = true;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (images[static_cast<std::size_t>(from)] != from)
        throw std::invalid_argument("Permutation::parse: cycles are not disjoint");
      if (cycle.size() > 1) images[static_cast<std::size_t>(from)] = to;
    }
    skip_ws();
  }
  if (!any_cycle) throw std::invalid_argument("Permutation::parse: empty input");
  return from_images(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(i)] = q[p[i]];
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // images of p transported along q: (x^q)^(p^q) = (x^p)^q
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(q[x])] = q[p[x]];
  return Permutation::from_images(std::move(images));
}

}  // namespace dgs
