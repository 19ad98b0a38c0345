#include "dgs/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

namespace dgs {

namespace {

// Recompute a level's orbit and transversal by BFS from its base point.
void recompute_orbit(ChainLevel& lv, int degree) {
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.transversal.emplace(lv.base_point, Permutation(degree));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int pt = lv.orbit[head];
    for (const Permutation& s : lv.gens) {
      int img = s[pt];
      if (!lv.transversal.count(img)) {
        lv.orbit.push_back(img);
        lv.transversal.emplace(img, compose(lv.transversal.at(pt), s));
      }
    }
  }
}

struct ChainBuilder {
  int degree;
  std::vector<ChainLevel> levels;

  // Sift g through levels starting at `from`; returns the residue and the
  // level at which it stuck (levels.size() when a new level is needed).
  std::pair<Permutation, std::size_t> sift_from(std::size_t from, Permutation g) const {
    for (std::size_t j = from; j < levels.size(); ++j) {
      if (g.is_identity()) return {g, j};
      int img = g[levels[j].base_point];
      auto it = levels[j].transversal.find(img);
      if (it == levels[j].transversal.end()) return {g, j};
      g = compose(g, it->second.inverse());
    }
    return {g, levels.size()};
  }

  // Insert g (fixing base[0..from-1], not identity) as a strong generator.
  // It is added to every level from `from` up to the first level whose base
  // point it moves, creating that level if needed.  Returns the deepest
  // level touched.
  std::size_t insert_generator(std::size_t from, const Permutation& g) {
    std::size_t last = from;
    while (last < levels.size() && g[levels[last].base_point] == levels[last].base_point) ++last;
    if (last == levels.size()) {
      ChainLevel lv;
      lv.base_point = g.smallest_moved_point();
      levels.push_back(lv);
    }
    for (std::size_t j = from; j <= last; ++j) {
      levels[j].gens.push_back(g);
      recompute_orbit(levels[j], degree);
    }
    return last;
  }

  // Verify levels from deep to shallow: every Schreier generator must sift
  // to the identity through the deeper levels.  insert_generator may grow
  // the level vector, so never hold references across it.
  void close() {
    std::size_t i = levels.size();
    while (i > 0) {
      --i;
      bool dirty = false;
      for (std::size_t oi = 0; !dirty && oi < levels[i].orbit.size(); ++oi) {
        for (std::size_t si = 0; !dirty && si < levels[i].gens.size(); ++si) {
          const int pt = levels[i].orbit[oi];
          const Permutation u = levels[i].transversal.at(pt);
          const Permutation s = levels[i].gens[si];
          Permutation w = compose(compose(u, s), levels[i].transversal.at(s[pt]).inverse());
          auto [res, stuck] = sift_from(i + 1, std::move(w));
          (void)stuck;
          if (!res.is_identity()) {
            std::size_t touched = insert_generator(i + 1, res);
            i = touched + 1;  // re-verify from the deepest touched level
            dirty = true;
          }
        }
      }
    }
  }
};

}  // namespace

StabChain StabChain::build(int degree, const std::vector<Permutation>& gens,
                           const std::vector<int>& prescribed_base) {
  ChainBuilder b{degree, {}};
  for (int pt : prescribed_base) {
    if (pt < 0 || pt >= degree) throw std::invalid_argument("StabChain: base point out of range");
    ChainLevel lv;
    lv.base_point = pt;
    b.levels.push_back(lv);
    recompute_orbit(b.levels.back(), degree);
  }
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("StabChain: generator degree mismatch");
    auto [res, at] = b.sift_from(0, g);
    if (!res.is_identity()) b.insert_generator(0, res);
  }
  b.close();

  StabChain chain;
  chain.degree_ = degree;
  chain.levels_ = std::move(b.levels);
  for (const ChainLevel& lv : chain.levels_) chain.base_.push_back(lv.base_point);
  return chain;
}

BigNat StabChain::order() const {
  BigNat n(1);
  for (const ChainLevel& lv : levels_) n.mul(lv.orbit.size());
  return n;
}

Permutation StabChain::sift(const Permutation& p) const {
  Permutation g = p;
  for (const ChainLevel& lv : levels_) {
    if (g.is_identity()) break;
    auto it = lv.transversal.find(g[lv.base_point]);
    if (it == lv.transversal.end()) return g;
    g = compose(g, it->second.inverse());
  }
  return g;
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("StabChain::contains: degree mismatch");
  return sift(p).is_identity();
}

std::optional<Permutation> StabChain::prefix_representative(const std::vector<int>& src,
                                                            const std::vector<int>& dst) const {
  if (src.size() != dst.size())
    throw std::invalid_argument("prefix_representative: length mismatch");
  if (src.size() > levels_.size())
    throw std::invalid_argument("prefix_representative: src longer than base");
  Permutation a(degree_);
  Permutation a_inv(degree_);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (levels_[i].base_point != src[i])
      throw std::invalid_argument("prefix_representative: src is not a base prefix");
    int target = a_inv[dst[i]];
    auto it = levels_[i].transversal.find(target);
    if (it == levels_[i].transversal.end()) return std::nullopt;
    a = compose(it->second, a);
    a_inv = a.inverse();
  }
  return a;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> gens) : degree_(degree) {
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> t(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) t[static_cast<std::size_t>(i)] = i;
    std::swap(t[0], t[1]);
    gens.push_back(Permutation::from_images(t));
    if (degree >= 3) {
      std::vector<int> c(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % degree;
      gens.push_back(Permutation::from_images(c));
    }
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

const StabChain& PermGroup::chain() const {
  auto c = std::atomic_load(&chain_);
  if (!c) {
    c = std::make_shared<const StabChain>(StabChain::build(degree_, gens_));
    std::atomic_store(&chain_, c);
  }
  return *c;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("PermGroup::contains: degree mismatch");
  return chain().contains(p);
}

std::vector<std::vector<int>> PermGroup::orbits() const { return point_orbits(degree_, gens_); }

std::optional<Permutation> PermGroup::representative_action(const std::vector<int>& src,
                                                            const std::vector<int>& dst) const {
  if (src.size() != dst.size())
    throw std::invalid_argument("representative_action: length mismatch");
  StabChain ch = StabChain::build(degree_, gens_, src);
  return ch.prefix_representative(src, dst);
}

std::vector<std::vector<int>> point_orbits(int degree, const std::vector<Permutation>& gens) {
  std::vector<int> owner(static_cast<std::size_t>(degree), -1);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < degree; ++start) {
    if (owner[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> orb{start};
    owner[static_cast<std::size_t>(start)] = start;
    for (std::size_t head = 0; head < orb.size(); ++head) {
      for (const Permutation& g : gens) {
        int img = g[orb[head]];
        if (owner[static_cast<std::size_t>(img)] == -1) {
          owner[static_cast<std::size_t>(img)] = start;
          orb.push_back(img);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  }
  return result;
}

std::vector<int> point_orbit(int degree, const std::vector<Permutation>& gens, int alpha) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> orb{alpha};
  seen[static_cast<std::size_t>(alpha)] = true;
  for (std::size_t head = 0; head < orb.size(); ++head) {
    for (const Permutation& g : gens) {
      int img = g[orb[head]];
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        orb.push_back(img);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

}  // namespace dgs
