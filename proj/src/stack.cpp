#include "dgs/stack.hpp"

#include <map>
#include <stdexcept>

namespace dgs {

DigraphStack::DigraphStack(int degree, std::vector<LabelledDigraph> entries) : degree_(degree) {
  entries_.reserve(entries.size());
  for (LabelledDigraph& g : entries) {
    if (g.degree() != degree_) throw std::invalid_argument("DigraphStack: degree mismatch");
    entries_.push_back(std::make_shared<const LabelledDigraph>(std::move(g)));
  }
}

DigraphStack DigraphStack::append(const DigraphStack& other) const {
  if (other.degree() != degree_) throw std::invalid_argument("append: degree mismatch");
  DigraphStack out = *this;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
  return out;
}

DigraphStack DigraphStack::append(const LabelledDigraph& entry) const {
  if (entry.degree() != degree_) throw std::invalid_argument("append: degree mismatch");
  DigraphStack out = *this;
  out.entries_.push_back(std::make_shared<const LabelledDigraph>(entry));
  return out;
}

DigraphStack DigraphStack::apply_perm(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("apply_perm: degree mismatch");
  DigraphStack out(degree_);
  out.entries_.reserve(entries_.size());
  for (const auto& entry : entries_)
    out.entries_.push_back(std::make_shared<const LabelledDigraph>(entry->apply_perm(g)));
  return out;
}

std::size_t DigraphStack::hash() const {
  std::size_t h = static_cast<std::size_t>(degree_) + 0x51ed270b7a14ull;
  for (const auto& g : entries_) h ^= g->hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

LabelledDigraph squash(const DigraphStack& stack) {
  const int n = stack.degree();
  const std::size_t k = stack.size();

  std::vector<Label> vlabels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<Label> per_entry;
    per_entry.reserve(k);
    for (std::size_t i = 0; i < k; ++i) per_entry.push_back(stack[i].vertex_label(v));
    vlabels[static_cast<std::size_t>(v)] = Label::seq(std::move(per_entry));
  }

  // union of arc sets, each labelled by the per-entry label list
  std::map<std::pair<int, int>, std::vector<Label>> arc_map;
  const Label absent = Label::hash_mark();
  for (std::size_t i = 0; i < k; ++i) {
    const LabelledDigraph& entry = stack[i];
    for (std::size_t a = 0; a < entry.arcs().size(); ++a) {
      auto [it, fresh] = arc_map.try_emplace(entry.arcs()[a], std::vector<Label>(k, absent));
      it->second[i] = entry.arc_labels()[a];
    }
  }

  std::vector<std::pair<int, int>> arcs;
  std::vector<Label> alabels;
  arcs.reserve(arc_map.size());
  alabels.reserve(arc_map.size());
  for (auto& [arc, labels] : arc_map) {
    arcs.push_back(arc);
    alabels.push_back(Label::seq(std::move(labels)));
  }

  // the reserved # appears only inside the list labels, never as a label itself
  return LabelledDigraph::make(n, std::move(arcs), std::move(vlabels), std::move(alabels));
}

}  // namespace dgs
