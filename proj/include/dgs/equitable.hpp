#pragma once

#include <optional>
#include <vector>

#include "dgs/bignat.hpp"
#include "dgs/perm_group.hpp"
#include "dgs/stack.hpp"

namespace dgs {

// Output of the equitable vertex labelling: an ordered list of labelled
// cells.  Cells are disjoint, cover the vertex set, and carry pairwise
// distinct labels; each cell's point list is ascending.
struct Classification {
  std::vector<std::pair<Label, std::vector<int>>> cells;

  bool discrete() const {
    for (const auto& c : cells)
      if (c.second.size() != 1) return false;
    return true;
  }
  // points of singleton cells, in cell order
  std::vector<int> singleton_points() const {
    std::vector<int> out;
    for (const auto& c : cells)
      if (c.second.size() == 1) out.push_back(c.second[0]);
    return out;
  }
};

// Refine the vertex labelling of a digraph until it is equitable: vertices
// sharing an output cell share their input label, and agree on the number
// of in- and out-neighbours per (vertex label, arc label).  Equivariant:
// running on g-images yields the same labels with cells mapped by g.
Classification equitable_labelling(const LabelledDigraph& g);

// Either the empty set or a right coset, overestimating a set of stack
// isomorphisms.  The group part always contains the identity and equals
// the estimate computed for (S, S).
class IsoEstimate {
public:
  static IsoEstimate empty_estimate(int degree);
  static IsoEstimate coset(PermGroup group, Permutation rep, BigNat size);

  bool is_empty() const { return !coset_.has_value(); }
  const BigNat& size() const { return size_; }
  bool is_singleton() const { return size_.is_one(); }
  const PermGroup& group() const { return coset_->group; }
  const Permutation& representative() const { return coset_->representative; }
  // the unique element, valid only for singleton estimates
  const Permutation& sole_element() const { return coset_->representative; }
  bool contains(const Permutation& p) const;

private:
  std::optional<RightCoset> coset_;
  BigNat size_;  // 0 when empty, otherwise |group|
};

// Per-stack half of the weak (entrywise) labelling: every entry classified
// on its own, then the cell systems intersected and ordered by signature.
struct WeakSide {
  std::vector<Classification> entry_cls;          // one per stack entry
  std::vector<std::vector<int>> cells;            // intersected cells, signature order
  std::vector<std::vector<int>> signatures;       // per cell, the shared signature
};

WeakSide weak_side(const DigraphStack& s);
// Assemble a side from already-classified entries.
WeakSide weak_side_from_entries(int degree, std::vector<Classification> entry_cls);

IsoEstimate weak_estimate(const DigraphStack& s, const DigraphStack& t, const WeakSide& ws,
                          const WeakSide& wt);
IsoEstimate strong_estimate(const DigraphStack& s, const DigraphStack& t,
                            const Classification& cs, const Classification& ct);

// The user-facing approximators.
IsoEstimate weak_approx(const DigraphStack& s, const DigraphStack& t);
IsoEstimate strong_approx(const DigraphStack& s, const DigraphStack& t);
std::vector<int> weak_fixed(const DigraphStack& s);
std::vector<int> strong_fixed(const DigraphStack& s);

// Stabiliser of an ordered list of disjoint cells: the direct product of
// the symmetric groups on the cells.
PermGroup cell_list_stabiliser(int degree, const std::vector<std::vector<int>>& cells);
BigNat cell_list_order(const std::vector<std::vector<int>>& cells);

}  // namespace dgs
