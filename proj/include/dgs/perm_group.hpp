#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dgs/bignat.hpp"
#include "dgs/perm.hpp"

namespace dgs {

// One level of a stabiliser chain: a base point, the generators of the
// group at this level, and a transversal u_p with base^u_p = p for every
// point p in the orbit of the base point.
struct ChainLevel {
  int base_point = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;  // BFS discovery order; orbit[0] == base_point
  std::unordered_map<int, Permutation> transversal;
};

// Deterministic stabiliser chain (Schreier-Sims, no randomisation).  An
// optional prescribed base fixes the initial base points, one level per
// prescribed point even when its orbit is trivial; further base points are
// chosen as the smallest point moved at that level.
class StabChain {
public:
  static StabChain build(int degree, const std::vector<Permutation>& gens,
                         const std::vector<int>& prescribed_base = {});

  int degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<int>& base() const { return base_; }

  BigNat order() const;
  bool contains(const Permutation& p) const;
  Permutation sift(const Permutation& p) const;  // residue after sifting

  // Element mapping src pointwise to dst, where src equals a prefix of the
  // base; nullopt when no such element exists.  Deterministic.
  std::optional<Permutation> prefix_representative(const std::vector<int>& src,
                                                   const std::vector<int>& dst) const;

  // Uniformly distributed element: product of one transversal element per
  // level, chosen by the supplied index source (level, orbit size) -> index.
  template <typename Pick>
  Permutation sample(Pick&& pick) const {
    Permutation g(degree_);
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const ChainLevel& lv = levels_[i];
      int pt = lv.orbit[pick(i, lv.orbit.size())];
      g = compose(lv.transversal.at(pt), g);
    }
    return g;
  }

private:
  StabChain() = default;
  int degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::vector<int> base_;
};

// A subgroup of Sym(n) given by generators, with a lazily built chain.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> gens);
  static PermGroup symmetric(int degree);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const StabChain& chain() const;
  BigNat order() const { return chain().order(); }
  bool is_trivial() const { return order().is_one(); }
  bool contains(const Permutation& p) const;

  // Orbit partition from the generators; sets ordered by minimum element,
  // points ascending within each set.
  std::vector<std::vector<int>> orbits() const;

  // Some g in the group with src[i]^g = dst[i] for all i, or nullopt.
  std::optional<Permutation> representative_action(const std::vector<int>& src,
                                                   const std::vector<int>& dst) const;

private:
  int degree_;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<const StabChain> chain_;
};

struct RightCoset {
  PermGroup group;
  Permutation representative;
};

// Orbit partition of {0..degree-1} under a generator list.
std::vector<std::vector<int>> point_orbits(int degree, const std::vector<Permutation>& gens);

// Orbit of a single point, ascending.
std::vector<int> point_orbit(int degree, const std::vector<Permutation>& gens, int alpha);

}  // namespace dgs
