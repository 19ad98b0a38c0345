#pragma once

// Shared fixtures and brute-force oracles for the test suite.

#include <algorithm>
#include <set>
#include <vector>

#include "dgs/canon.hpp"
#include "dgs/equitable.hpp"
#include "dgs/probspec.hpp"
#include "dgs/rng.hpp"
#include "dgs/stack.hpp"

namespace dgs::testing {

inline Label white() { return Label::text("white"); }
inline Label black() { return Label::text("black"); }
inline Label solid() { return Label::text("solid"); }
inline Label dashed() { return Label::text("dashed"); }

inline std::pair<int, int> arc(int u, int v) { return {u - 1, v - 1}; }  // 1-based helper

// The five-vertex labelled digraph with a loop at 2: primes are black,
// arcs point "upward" solid and "downward" dashed.
inline LabelledDigraph example_digraph_five() {
  std::vector<std::pair<int, int>> arcs{arc(2, 2), arc(2, 3), arc(3, 2),
                                        arc(3, 5), arc(5, 1), arc(5, 4)};
  std::vector<Label> vlabels(5, white());
  for (int prime : {2, 3, 5}) vlabels[static_cast<std::size_t>(prime - 1)] = black();
  std::vector<Label> alabels;
  for (auto [u, v] : arcs) alabels.push_back(u <= v ? solid() : dashed());
  return LabelledDigraph::make(5, std::move(arcs), std::move(vlabels), std::move(alabels));
}

// The length-3 stack on six points whose automorphism group is
// <(1 2)(3 4)(5 6)>: an orbital graph, a set marker, and a hand-built
// labelled digraph.
inline DigraphStack example_stack_six() {
  PermGroup k(6, {Permutation::parse("(1,2)(3,4)(5,6)", 6), Permutation::parse("(2,4,6)", 6)});
  LabelledDigraph first = orbital_graph(k, 0, 2);  // base pair (1, 3)
  std::vector<Label> v1(6, white());
  std::vector<Label> a1(first.arcs().size(), solid());
  first = LabelledDigraph::make(6, first.arcs(), std::move(v1), std::move(a1));

  std::vector<Label> v2(6, white());
  v2[0] = black();
  v2[1] = black();
  LabelledDigraph second = LabelledDigraph(6).with_vertex_labels(std::move(v2));

  std::vector<std::pair<int, int>> arcs3{arc(5, 1), arc(6, 1), arc(5, 2), arc(6, 2),
                                         arc(3, 5), arc(4, 6), arc(3, 4), arc(4, 3)};
  std::vector<Label> a3{dashed(), dashed(), dashed(), dashed(),
                        solid(),  solid(),  solid(),  solid()};
  std::vector<Label> v3(6, white());
  v3[4] = black();
  v3[5] = black();
  LabelledDigraph third = LabelledDigraph::make(6, std::move(arcs3), std::move(v3), std::move(a3));

  return DigraphStack(6, {first, second, third});
}

// The two stack pairs compared by the three approximators: undirected
// cycles with solid edges and perfect matchings with dashed edges.
inline LabelledDigraph sym_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                 const Label& label) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<Label> alabels;
  for (auto [u, v] : edges) {
    arcs.emplace_back(u - 1, v - 1);
    arcs.emplace_back(v - 1, u - 1);
    alabels.push_back(label);
    alabels.push_back(label);
  }
  return LabelledDigraph::make(n, std::move(arcs), std::vector<Label>(static_cast<std::size_t>(n), white()),
                               std::move(alabels));
}

inline DigraphStack approx_stack_gammas() {
  LabelledDigraph g1 = sym_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}, solid());
  LabelledDigraph g2 = sym_edges(6, {{1, 2}, {3, 6}, {4, 5}}, dashed());
  return DigraphStack(6, {g1, g2});
}

inline DigraphStack approx_stack_deltas() {
  LabelledDigraph d1 = sym_edges(6, {{6, 4}, {4, 5}, {5, 3}, {3, 2}, {2, 1}, {1, 6}}, solid());
  LabelledDigraph d2 = sym_edges(6, {{6, 4}, {5, 1}, {3, 2}}, dashed());
  return DigraphStack(6, {d1, d2});
}

inline std::vector<Permutation> brute_iso(const DigraphStack& s, const DigraphStack& t) {
  std::vector<Permutation> out;
  for (const Permutation& g : all_permutations(s.degree()))
    if (s.apply_perm(g) == t) out.push_back(g);
  return out;
}

inline std::vector<Permutation> brute_iso(const LabelledDigraph& g, const LabelledDigraph& d) {
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(g.degree()))
    if (g.apply_perm(p) == d) out.push_back(p);
  return out;
}

inline std::set<std::vector<int>> perm_set(const std::vector<Permutation>& ps) {
  std::set<std::vector<int>> out;
  for (const Permutation& p : ps) out.insert(p.images());
  return out;
}

inline Permutation random_perm(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  rng.shuffle(images);
  return Permutation::from_images(std::move(images));
}

inline LabelledDigraph random_digraph(int n, Rng& rng, int label_pool = 2) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<Label> alabels;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (rng.below(4) == 0) {
        arcs.emplace_back(u, v);
        alabels.push_back(Label::integer(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(label_pool)))));
      }
  std::vector<Label> vlabels;
  for (int v = 0; v < n; ++v)
    vlabels.push_back(Label::integer(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(label_pool)))));
  return LabelledDigraph::make(n, std::move(arcs), std::move(vlabels), std::move(alabels));
}

inline DigraphStack random_stack(int n, Rng& rng, std::size_t max_len = 3) {
  std::size_t len = 1 + rng.below(max_len);
  std::vector<LabelledDigraph> entries;
  for (std::size_t i = 0; i < len; ++i) entries.push_back(random_digraph(n, rng));
  return DigraphStack(n, std::move(entries));
}

}  // namespace dgs::testing
