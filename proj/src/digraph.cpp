#include "dgs/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dgs {

LabelledDigraph::LabelledDigraph(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("LabelledDigraph: negative degree");
  vertex_labels_.assign(static_cast<std::size_t>(degree), Label());
}

LabelledDigraph LabelledDigraph::make(int degree, std::vector<std::pair<int, int>> arcs,
                                      std::vector<Label> vertex_labels,
                                      std::vector<Label> arc_labels) {
  LabelledDigraph g(degree);
  if (!vertex_labels.empty()) {
    if (static_cast<int>(vertex_labels.size()) != degree)
      throw std::invalid_argument("LabelledDigraph: vertex label count mismatch");
    g.vertex_labels_ = std::move(vertex_labels);
  }
  if (arc_labels.empty()) arc_labels.assign(arcs.size(), Label());
  if (arc_labels.size() != arcs.size())
    throw std::invalid_argument("LabelledDigraph: arc label count mismatch");

  for (const Label& l : g.vertex_labels_)
    if (l.kind() == LabelKind::Hash)
      throw std::invalid_argument("LabelledDigraph: # is reserved and cannot label a vertex");
  for (const Label& l : arc_labels)
    if (l.kind() == LabelKind::Hash)
      throw std::invalid_argument("LabelledDigraph: # is reserved and cannot label an arc");

  std::vector<std::size_t> idx(arcs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
  g.arcs_.reserve(arcs.size());
  g.arc_labels_.reserve(arcs.size());
  for (std::size_t i : idx) {
    auto [u, v] = arcs[i];
    if (u < 0 || u >= degree || v < 0 || v >= degree)
      throw std::invalid_argument("LabelledDigraph: arc endpoint out of range");
    if (!g.arcs_.empty() && g.arcs_.back() == arcs[i])
      throw std::invalid_argument("LabelledDigraph: duplicate arc");
    g.arcs_.push_back(arcs[i]);
    g.arc_labels_.push_back(arc_labels[i]);
  }
  return g;
}

bool LabelledDigraph::has_arc(int u, int v) const { return arc_label(u, v) != nullptr; }

const Label* LabelledDigraph::arc_label(int u, int v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
  if (it == arcs_.end() || *it != std::make_pair(u, v)) return nullptr;
  return &arc_labels_[static_cast<std::size_t>(it - arcs_.begin())];
}

LabelledDigraph LabelledDigraph::apply_perm(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("apply_perm: degree mismatch");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(arcs_.size());
  for (auto [u, v] : arcs_) arcs.emplace_back(g[u], g[v]);
  std::vector<Label> vlabels(static_cast<std::size_t>(degree_));
  for (int v = 0; v < degree_; ++v) vlabels[static_cast<std::size_t>(g[v])] = vertex_labels_[static_cast<std::size_t>(v)];

  LabelledDigraph out(degree_);
  out.vertex_labels_ = std::move(vlabels);
  std::vector<std::size_t> idx(arcs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
  out.arcs_.reserve(arcs.size());
  out.arc_labels_.reserve(arcs.size());
  for (std::size_t i : idx) {
    out.arcs_.push_back(arcs[i]);
    out.arc_labels_.push_back(arc_labels_[i]);
  }
  return out;
}

LabelledDigraph LabelledDigraph::with_vertex_labels(std::vector<Label> labels) const {
  if (static_cast<int>(labels.size()) != degree_)
    throw std::invalid_argument("with_vertex_labels: label count mismatch");
  LabelledDigraph out = *this;
  out.vertex_labels_ = std::move(labels);
  return out;
}

LabelledDigraph LabelledDigraph::without_arcs() const {
  LabelledDigraph out(degree_);
  out.vertex_labels_ = vertex_labels_;
  return out;
}

std::size_t LabelledDigraph::hash() const {
  if (hash_cache_ != 0) return hash_cache_;
  std::size_t h = static_cast<std::size_t>(degree_) * 0x9e3779b97f4a7c15ull;
  auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (auto [u, v] : arcs_) mix(static_cast<std::size_t>(u) * 131071 + static_cast<std::size_t>(v));
  for (const Label& l : arc_labels_) mix(l.hash());
  for (const Label& l : vertex_labels_) mix(l.hash());
  hash_cache_ = h == 0 ? 1 : h;
  return hash_cache_;
}

bool induces_isomorphism(const LabelledDigraph& from, const LabelledDigraph& to,
                         const Permutation& g) {
  if (from.degree() != to.degree() || g.degree() != from.degree())
    throw std::invalid_argument("induces_isomorphism: degree mismatch");
  return from.apply_perm(g) == to;
}

LabelledDigraph orbital_graph(int degree, const std::vector<Permutation>& gens, int alpha,
                              int beta) {
  if (alpha == beta) throw std::invalid_argument("orbital_graph: base pair entries must differ");
  if (alpha < 0 || beta < 0 || alpha >= degree || beta >= degree)
    throw std::invalid_argument("orbital_graph: base pair out of range");
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> queue{{alpha, beta}};
  seen.insert({alpha, beta});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    for (const Permutation& g : gens) {
      std::pair<int, int> img{g[a], g[b]};
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return LabelledDigraph::make(degree, std::vector<std::pair<int, int>>(seen.begin(), seen.end()));
}

LabelledDigraph orbital_graph(const PermGroup& group, int alpha, int beta) {
  return orbital_graph(group.degree(), group.generators(), alpha, beta);
}

bool digraph_less(const LabelledDigraph& a, const LabelledDigraph& b) {
  if (a.vertex_labels() != b.vertex_labels()) {
    return std::lexicographical_compare(a.vertex_labels().begin(), a.vertex_labels().end(),
                                        b.vertex_labels().begin(), b.vertex_labels().end());
  }
  if (a.arcs() != b.arcs()) return a.arcs() < b.arcs();
  return std::lexicographical_compare(a.arc_labels().begin(), a.arc_labels().end(),
                                      b.arc_labels().begin(), b.arc_labels().end());
}

}  // namespace dgs
