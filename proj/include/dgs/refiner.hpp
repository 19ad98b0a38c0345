#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "dgs/equitable.hpp"
#include "dgs/perm_group.hpp"
#include "dgs/stack.hpp"

namespace dgs {

// Supplies the fixed points of the current stack, per the approximator the
// search is configured with.  Handed to refiners on every application.
using FixedFn = std::function<std::vector<int>(const DigraphStack&)>;

// A pair of stack-to-stack functions encoding one constraint, plus the
// membership test used at leaves.  For every g in the represented set U and
// every stack S: apply_left(S)^g = apply_right(S^g).  When U contains the
// identity the two functions coincide.
//
// `depth` identifies the search node; stateful refiners key their tables by
// it so that states from an abandoned refinement pass at one depth cannot
// be confused with states at another.
class Refiner {
public:
  virtual ~Refiner() = default;
  const std::string& name() const { return name_; }
  bool is_group() const { return is_group_; }

  virtual DigraphStack apply_left(const DigraphStack& s, const FixedFn& fixed,
                                  std::size_t depth) = 0;
  virtual DigraphStack apply_right(const DigraphStack& t, const FixedFn& fixed,
                                   std::size_t depth) = 0;
  virtual bool member(const Permutation& p) const = 0;
  virtual void begin_search() {}

protected:
  Refiner(std::string name, bool is_group) : name_(std::move(name)), is_group_(is_group) {}

private:
  std::string name_;
  bool is_group_;
};

using RefinerPtr = std::shared_ptr<Refiner>;

enum class GroupStrategy { Orbits, OrbitalGraphs };

struct RefinerOptions {
  bool strip_arcs = false;  // arc-free constraint digraphs, vertex labels kept
};

// Set stabiliser/transporter: arc-free digraphs labelling the members.
RefinerPtr set_refiner(int degree, const std::vector<int>& a, const std::vector<int>& b,
                       const RefinerOptions& opts = {});

// List-of-subsets stabiliser/transporter: each vertex labelled by the set
// of list positions containing it.  Also encodes point lists (as singleton
// subsets) and single sets.
RefinerPtr list_of_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                   const std::vector<std::vector<int>>& vs,
                                   const RefinerOptions& opts = {});

// Set-of-subsets stabiliser/transporter: arcs between distinct co-members,
// labels counting per-size memberships.
RefinerPtr set_of_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                  const std::vector<std::vector<int>>& vs,
                                  const RefinerOptions& opts = {});

// Set of pairwise disjoint subsets (unordered partition when the union is
// everything): arcs within members, union membership labelled.
RefinerPtr disjoint_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                    const std::vector<std::vector<int>>& vs,
                                    const RefinerOptions& opts = {});

// Centraliser/conjugacy of a permutation via its functional digraph.
RefinerPtr perm_conjugacy_refiner(const Permutation& g, const Permutation& h,
                                  const RefinerOptions& opts = {});

// Digraph automorphism/isomorphism: the constant refiner [Gamma], [Delta].
RefinerPtr digraph_iso_refiner(const LabelledDigraph& g, const LabelledDigraph& d,
                               const RefinerOptions& opts = {});

// Membership in a group given by generators.  Lazily tabulates, per stack
// length, the fixed points of the current left stack together with a stack
// encoding the orbit structure of their stabiliser; right applications
// transport the tabled stack along a representative.
RefinerPtr group_refiner(PermGroup g, GroupStrategy strategy);

// Membership in the right coset G * rep.
RefinerPtr coset_refiner(PermGroup g, Permutation rep, GroupStrategy strategy);

// The refiner for U * shift^-1 derived from a refiner for U, given a known
// element shift of U: both sides apply the left function, membership is
// conjugated.  Used to turn coset constraints into group constraints once a
// representative has been found.
RefinerPtr shifted_refiner(RefinerPtr inner, const Permutation& shift);

// The digraph of the fixed-point splitter: arc-free, alpha labelled 1.
LabelledDigraph point_digraph(int degree, int alpha);

// Arc-free digraph labelling each vertex with its list positions.
LabelledDigraph list_of_subsets_digraph(int degree, const std::vector<std::vector<int>>& sets);

}  // namespace dgs
