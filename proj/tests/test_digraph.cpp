#include "doctest.h"
#include "helpers.hpp"

#include "dgs/digraph.hpp"

using namespace dgs;
using namespace dgs::testing;

TEST_CASE("label total order: Hash < Int < Str < Count < Seq") {
  CHECK(Label::hash_mark() < Label::integer(-5));
  CHECK(Label::integer(100) < Label::text(""));
  CHECK(Label::text("zzz") < Label::count(0, 0));
  CHECK(Label::count(9, 9) < Label::seq({}));
  CHECK(Label::integer(1) < Label::integer(2));
  CHECK(Label::text("a") < Label::text("b"));
  CHECK(Label::count(1, 2) < Label::count(1, 3));
  CHECK(Label::seq({Label::integer(1)}) < Label::seq({Label::integer(1), Label::integer(0)}));
  CHECK(Label::seq({Label::integer(0)}) < Label::seq({Label::integer(1)}));
  CHECK(Label::seq({Label::integer(1)}) == Label::seq({Label::integer(1)}));
}

TEST_CASE("digraphs reject the reserved label") {
  CHECK_THROWS_AS(LabelledDigraph::make(2, {}, {Label::hash_mark(), Label::integer(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LabelledDigraph::make(2, {{0, 1}}, {}, {Label::hash_mark()}),
                  std::invalid_argument);
  // lists containing # are fine; only the bare symbol is reserved
  CHECK_NOTHROW(LabelledDigraph::make(2, {{0, 1}}, {},
                                      {Label::seq({Label::hash_mark(), Label::integer(0)})}));
}

TEST_CASE("apply_perm moves arcs and labels together") {
  LabelledDigraph gamma = example_digraph_five();
  CHECK(gamma.apply_perm(Permutation(5)) == gamma);

  Permutation g = Permutation::parse("(1,5)(2,3)", 5);
  LabelledDigraph image = gamma.apply_perm(g);
  // the loop moves from vertex 2 to vertex 3
  CHECK(gamma.has_arc(1, 1));
  CHECK(!image.has_arc(1, 1));
  CHECK(image.has_arc(2, 2));
  // vertex 1 goes from white to black
  CHECK(gamma.vertex_label(0) == white());
  CHECK(image.vertex_label(0) == black());
  CHECK(!(image == gamma));

  // label multiset is preserved
  auto sorted_labels = [](std::vector<Label> ls) {
    std::sort(ls.begin(), ls.end());
    return ls;
  };
  CHECK(sorted_labels(gamma.vertex_labels()) == sorted_labels(image.vertex_labels()));
  CHECK(sorted_labels(gamma.arc_labels()) == sorted_labels(image.arc_labels()));
}

TEST_CASE("apply_perm composes as a right action") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    LabelledDigraph gamma = random_digraph(6, rng);
    Permutation g = random_perm(6, rng), h = random_perm(6, rng);
    CHECK(gamma.apply_perm(g).apply_perm(h) == gamma.apply_perm(compose(g, h)));
  }
}

TEST_CASE("induces_isomorphism on the worked example") {
  LabelledDigraph gamma = example_digraph_five();
  CHECK(induces_isomorphism(gamma, gamma, Permutation::parse("(1,4)", 5)));
  CHECK(!induces_isomorphism(gamma, gamma, Permutation::parse("(1,5)(2,3)", 5)));
  // (1 4) is the unique non-trivial automorphism
  auto auts = brute_iso(gamma, gamma);
  CHECK(perm_set(auts) ==
        perm_set({Permutation(5), Permutation::parse("(1,4)", 5)}));
  // the transporter to the image is the right coset of Aut
  Permutation g = Permutation::parse("(1,5)(2,3)", 5);
  auto isos = brute_iso(gamma, gamma.apply_perm(g));
  CHECK(perm_set(isos) == perm_set({g, Permutation::parse("(1,4,5)(2,3)", 5)}));

  LabelledDigraph blank(4);
  CHECK(induces_isomorphism(blank, blank, Permutation::parse("(1,2,3,4)", 4)));
}

TEST_CASE("orbital graphs of the cyclic group") {
  PermGroup c6(6, {Permutation::parse("(1,2,3,4,5,6)", 6)});

  LabelledDigraph cycle = orbital_graph(c6, 0, 1);
  std::vector<std::pair<int, int>> expect{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  std::sort(expect.begin(), expect.end());
  CHECK(cycle.arcs() == expect);

  LabelledDigraph matching = orbital_graph(c6, 0, 3);
  std::vector<std::pair<int, int>> expect2{{0, 3}, {3, 0}, {1, 4}, {4, 1}, {2, 5}, {5, 2}};
  std::sort(expect2.begin(), expect2.end());
  CHECK(matching.arcs() == expect2);

  CHECK_THROWS_AS(orbital_graph(c6, 2, 2), std::invalid_argument);
}

TEST_CASE("orbital graphs of the Klein four-group") {
  PermGroup v(4, {Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)});
  LabelledDigraph og = orbital_graph(v, 0, 1);
  std::vector<std::pair<int, int>> expect{{0, 1}, {1, 0}, {2, 3}, {3, 2}};
  std::sort(expect.begin(), expect.end());
  CHECK(og.arcs() == expect);

  // each orbital graph has automorphism group of order 8; any two distinct
  // orbital graphs intersect in exactly V
  std::vector<LabelledDigraph> ogs{orbital_graph(v, 0, 1), orbital_graph(v, 0, 2),
                                   orbital_graph(v, 0, 3)};
  std::vector<std::set<std::vector<int>>> auts;
  for (const LabelledDigraph& g : ogs) {
    auto a = brute_iso(g, g);
    CHECK(a.size() == 8);
    auts.push_back(perm_set(a));
  }
  std::set<std::vector<int>> v_elems = perm_set(
      {Permutation(4), Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4),
       Permutation::parse("(1,4)(2,3)", 4)});
  for (std::size_t i = 0; i < auts.size(); ++i)
    for (std::size_t j = i + 1; j < auts.size(); ++j) {
      std::set<std::vector<int>> inter;
      std::set_intersection(auts[i].begin(), auts[i].end(), auts[j].begin(), auts[j].end(),
                            std::inserter(inter, inter.begin()));
      CHECK(inter == v_elems);
    }
}

TEST_CASE("generators act as automorphisms of every orbital graph") {
  Rng rng(12);
  for (int i = 0; i < 15; ++i) {
    PermGroup g(6, {random_perm(6, rng), random_perm(6, rng)});
    for (int b = 1; b < 4; ++b) {
      LabelledDigraph og = orbital_graph(g, 0, b);
      for (const Permutation& gen : g.generators())
        CHECK(induces_isomorphism(og, og, gen));
    }
  }
}
