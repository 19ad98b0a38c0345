#pragma once

#include <memory>
#include <vector>

#include "dgs/digraph.hpp"

namespace dgs {

// An ordered list of labelled digraphs on a common vertex set.  The empty
// stack is valid; every permutation is one of its automorphisms.  Entries
// are shared between stacks, so appending is cheap.
class DigraphStack {
public:
  explicit DigraphStack(int degree) : degree_(degree) {}
  DigraphStack(int degree, std::vector<LabelledDigraph> entries);

  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const LabelledDigraph& operator[](std::size_t i) const { return *entries_[i]; }

  DigraphStack append(const DigraphStack& other) const;
  DigraphStack append(const LabelledDigraph& entry) const;
  DigraphStack apply_perm(const Permutation& g) const;

  friend bool operator==(const DigraphStack& a, const DigraphStack& b) {
    if (a.degree_ != b.degree_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i] == b.entries_[i]) continue;  // shared
      if (!(*a.entries_[i] == *b.entries_[i])) return false;
    }
    return true;
  }
  std::size_t hash() const;

private:
  int degree_;
  std::vector<std::shared_ptr<const LabelledDigraph>> entries_;
};

// The single labelled digraph carrying all the information of the stack:
// arcs are the union over entries, every vertex label is the list of
// per-entry labels, and every arc label is the list of per-entry labels
// with # marking entries the arc is absent from.
LabelledDigraph squash(const DigraphStack& stack);

}  // namespace dgs
