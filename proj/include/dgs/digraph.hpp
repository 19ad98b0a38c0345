#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dgs/label.hpp"
#include "dgs/perm.hpp"
#include "dgs/perm_group.hpp"

namespace dgs {

// A vertex- and arc-labelled digraph on {0..n-1}.  Loops are allowed,
// parallel arcs are not.  The arc list is kept sorted so that structural
// equality is plain memberwise comparison.
class LabelledDigraph {
public:
  explicit LabelledDigraph(int degree);  // arc-free, every vertex labelled 0

  // vertex_labels/arc_labels may be empty (defaulting to 0); arc_labels is
  // parallel to the given arc order.
  static LabelledDigraph make(int degree, std::vector<std::pair<int, int>> arcs,
                              std::vector<Label> vertex_labels = {},
                              std::vector<Label> arc_labels = {});

  int degree() const { return degree_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<Label>& arc_labels() const { return arc_labels_; }
  const std::vector<Label>& vertex_labels() const { return vertex_labels_; }
  const Label& vertex_label(int v) const { return vertex_labels_[static_cast<std::size_t>(v)]; }

  bool has_arc(int u, int v) const;
  const Label* arc_label(int u, int v) const;  // nullptr when absent

  LabelledDigraph apply_perm(const Permutation& g) const;
  LabelledDigraph with_vertex_labels(std::vector<Label> labels) const;
  LabelledDigraph without_arcs() const;

  friend bool operator==(const LabelledDigraph& a, const LabelledDigraph& b) {
    return a.degree_ == b.degree_ && a.arcs_ == b.arcs_ && a.arc_labels_ == b.arc_labels_ &&
           a.vertex_labels_ == b.vertex_labels_;
  }
  std::size_t hash() const;  // computed once, cached

private:
  int degree_ = 0;
  std::vector<std::pair<int, int>> arcs_;  // sorted
  std::vector<Label> arc_labels_;          // parallel to arcs_
  std::vector<Label> vertex_labels_;       // size degree_
  mutable std::size_t hash_cache_ = 0;
};

// True iff g maps `from` onto `to` preserving arcs and all labels.
bool induces_isomorphism(const LabelledDigraph& from, const LabelledDigraph& to,
                         const Permutation& g);

// The orbital graph with base pair (alpha, beta): arcs are the images of
// (alpha, beta) under the group; all labels 0.
LabelledDigraph orbital_graph(int degree, const std::vector<Permutation>& gens, int alpha,
                              int beta);
LabelledDigraph orbital_graph(const PermGroup& group, int alpha, int beta);

// Total order on digraphs used to pick canonical forms: vertex labels,
// then arcs, then arc labels, lexicographically.
bool digraph_less(const LabelledDigraph& a, const LabelledDigraph& b);

}  // namespace dgs
