#include "dgs/splitter.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgs {

std::vector<std::pair<DigraphStack, DigraphStack>> SplitResult::pairs() const {
  std::vector<std::pair<DigraphStack, DigraphStack>> out;
  out.reserve(betas.size());
  const int degree = left_extension.degree();
  for (int beta : betas)
    out.emplace_back(left_extension, DigraphStack(degree, {point_digraph(degree, beta)}));
  return out;
}

int split_point(const IsoEstimate& est) {
  if (est.is_empty() || est.is_singleton())
    throw std::invalid_argument("split_point: estimate has fewer than two elements");
  std::size_t best_size = 0;
  int alpha = -1;
  for (const std::vector<int>& orbit : est.group().orbits()) {
    if (orbit.size() < 2) continue;
    if (alpha == -1 || orbit.size() < best_size ||
        (orbit.size() == best_size && orbit[0] < alpha)) {
      best_size = orbit.size();
      alpha = orbit[0];
    }
  }
  if (alpha == -1) throw std::logic_error("split_point: no orbit of size >= 2 in a non-trivial group");
  return alpha;
}

SplitResult split(const DigraphStack& s, const DigraphStack& t, const IsoEstimate& est) {
  SplitResult out;
  out.alpha = split_point(est);
  const int degree = s.degree();

  std::vector<int> orbit = point_orbit(degree, est.group().generators(), out.alpha);
  std::vector<int> betas;
  betas.reserve(orbit.size());
  for (int x : orbit) betas.push_back(est.representative()[x]);
  std::sort(betas.begin(), betas.end());

  if (s == t) {
    // stabilised child first
    auto it = std::find(betas.begin(), betas.end(), out.alpha);
    if (it != betas.end()) betas.erase(it);
    betas.insert(betas.begin(), out.alpha);
  }
  out.betas = std::move(betas);
  out.left_extension = DigraphStack(degree, {point_digraph(degree, out.alpha)});
  return out;
}

}  // namespace dgs
