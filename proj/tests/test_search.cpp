#include "doctest.h"
#include "helpers.hpp"

#include "dgs/search.hpp"

using namespace dgs;
using namespace dgs::testing;

namespace {

SearchOptions checked(ApproxKind kind) {
  SearchOptions opts;
  opts.approx = kind;
  opts.check_invariants = true;
  return opts;
}

}  // namespace

TEST_CASE("no constraints: the whole symmetric group") {
  SearchEngine eng(3, {}, checked(ApproxKind::Strong));
  CHECK(eng.find_all().size() == 6);
}

TEST_CASE("refine without refiners returns its input unchanged") {
  SearchEngine eng(4, {}, checked(ApproxKind::Strong));
  Rng rng(70);
  DigraphStack s = random_stack(4, rng), t = random_stack(4, rng);
  auto [s2, t2] = eng.refine_pair(s, t);
  CHECK(s2 == s);
  CHECK(t2 == t);
}

TEST_CASE("refine with one constant refiner appends exactly one pass") {
  // the first pass shrinks the estimate, the second makes no progress and
  // is dropped, so each side grows by one entry
  SearchEngine eng(5, {set_refiner(5, {0, 1}, {2, 3})}, checked(ApproxKind::Strong));
  auto [s, t] = eng.refine_pair(DigraphStack(5), DigraphStack(5));
  CHECK(s.size() == 1);
  CHECK(t.size() == 1);
  CHECK(s[0].vertex_label(0) == Label::integer(1));
  CHECK(t[0].vertex_label(2) == Label::integer(1));
}

TEST_CASE("refine preserves solutions") {
  Rng rng(74);
  for (int i = 0; i < 40; ++i) {
    int n = 4 + static_cast<int>(rng.below(2));
    Permutation p = random_perm(n, rng);
    std::vector<int> set;
    for (int x = 0; x < n; ++x)
      if (rng.below(2)) set.push_back(x);
    std::vector<int> img;
    for (int x : set) img.push_back(p[x]);
    std::sort(img.begin(), img.end());
    std::vector<RefinerPtr> rs{set_refiner(n, set, img),
                               perm_conjugacy_refiner(p, conjugate(p, random_perm(n, rng)))};
    SearchEngine eng(n, rs, checked(ApproxKind::Strong));
    DigraphStack s = random_stack(n, rng, 1);
    DigraphStack t = s.apply_perm(random_perm(n, rng));
    auto [s2, t2] = eng.refine_pair(s, t);
    for (const Permutation& g : brute_iso(s, t)) {
      bool solves = rs[0]->member(g) && rs[1]->member(g);
      if (solves) {
        // still an isomorphism of the refined pair
        CHECK(s2.apply_perm(g) == t2);
      }
    }
  }
}

TEST_CASE("set stabiliser of {1,2} in S4") {
  for (ApproxKind kind : {ApproxKind::Weak, ApproxKind::Strong, ApproxKind::Exact}) {
    SearchEngine eng(4, {set_refiner(4, {0, 1}, {0, 1})}, checked(kind));
    auto all = eng.find_all();
    CHECK(perm_set(all) ==
          perm_set({Permutation(4), Permutation::parse("(1,2)", 4),
                    Permutation::parse("(3,4)", 4), Permutation::parse("(1,2)(3,4)", 4)}));
  }
}

TEST_CASE("centraliser of (1 2)(3 6 5) in S6") {
  Permutation g = Permutation::parse("(1,2)(3,6,5)", 6);
  for (ApproxKind kind : {ApproxKind::Weak, ApproxKind::Strong, ApproxKind::Exact}) {
    SearchEngine eng(6, {perm_conjugacy_refiner(g, g)}, checked(kind));
    auto all = eng.find_all();
    CHECK(all.size() == 6);
    for (const Permutation& x : all) CHECK(conjugate(g, x) == g);

    BSGSResult bsgs = eng.find_generators();
    PermGroup found(6, bsgs.strong_generators);
    CHECK(found.order().as_u64() == 6);
    CHECK(found.contains(Permutation::parse("(1,2)", 6)));
    CHECK(found.contains(Permutation::parse("(3,6,5)", 6)));
    CHECK(verify_bsgs(6, bsgs, BigNat(6)));
  }
}

TEST_CASE("single transporter and the empty case") {
  SearchEngine eng(4, {set_refiner(4, {0, 1}, {2, 3})}, checked(ApproxKind::Strong));
  auto found = eng.find_one();
  REQUIRE(found.has_value());
  CHECK((*found)[0] + (*found)[1] == 5);  // maps {1,2} onto {3,4}

  // the worked non-transportable set-of-subsets instance
  std::vector<std::vector<int>> u{{0}, {0, 1, 2}, {1, 3}};
  std::vector<std::vector<int>> v{{4}, {1, 2, 3}, {2, 3}};
  SearchEngine eng2(5, {set_of_subsets_refiner(5, u, v)}, checked(ApproxKind::Strong));
  CHECK(!eng2.find_one().has_value());
  CHECK(eng2.stats().nodes == 0);  // the estimate empties at the root
}

TEST_CASE("single agrees with all on random problems") {
  Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    int n = 4 + static_cast<int>(rng.below(2));
    std::vector<int> a, b;
    for (int x = 0; x < n; ++x) {
      if (rng.below(2)) a.push_back(x);
      if (rng.below(2)) b.push_back(x);
    }
    std::vector<RefinerPtr> rs{set_refiner(n, a, b)};
    SearchEngine all_eng(n, rs, checked(ApproxKind::Strong));
    SearchEngine one_eng(n, rs, checked(ApproxKind::Strong));
    CHECK(all_eng.find_all().empty() == !one_eng.find_one().has_value());
  }
}

TEST_CASE("generator search on the trivial group") {
  // the pointwise stabiliser of every point
  std::vector<std::vector<int>> singletons;
  for (int i = 0; i < 4; ++i) singletons.push_back({i});
  SearchEngine eng(4, {list_of_subsets_refiner(4, singletons, singletons)},
                   checked(ApproxKind::Strong));
  BSGSResult bsgs = eng.find_generators();
  REQUIRE(bsgs.strong_generators.size() == 1);
  CHECK(bsgs.strong_generators[0].is_identity());
  CHECK(bsgs.base.empty());
  CHECK(eng.stats().nodes == 0);
}

TEST_CASE("generator search on a partition stabiliser") {
  SearchEngine eng(4, {disjoint_subsets_refiner(4, {{0, 1}, {2}}, {{0, 1}, {2}})},
                   checked(ApproxKind::Strong));
  BSGSResult bsgs = eng.find_generators();
  PermGroup found(4, bsgs.strong_generators);
  CHECK(found.order().as_u64() == 2);
  CHECK(found.contains(Permutation::parse("(1,2)", 4)));
  CHECK(verify_bsgs(4, bsgs, BigNat(2)));
}

TEST_CASE("generator search rejects constraints without the identity") {
  SearchEngine eng(4, {set_refiner(4, {0}, {1})}, checked(ApproxKind::Strong));
  CHECK_THROWS_AS(eng.find_generators(), std::invalid_argument);
}

TEST_CASE("gens output is strong and pruning does not change the group") {
  Rng rng(72);
  for (int i = 0; i < 20; ++i) {
    int n = 5;
    Permutation a = random_perm(n, rng);
    PermGroup g(n, {a, random_perm(n, rng)});
    std::vector<int> set;
    for (int x = 0; x < n; ++x)
      if (rng.below(2)) set.push_back(x);

    std::vector<RefinerPtr> rs{group_refiner(g, GroupStrategy::OrbitalGraphs),
                               set_refiner(n, set, set)};
    SearchOptions with = checked(ApproxKind::Strong);
    SearchOptions without = with;
    without.prune_gens_orbit = false;

    SearchEngine e1(n, rs, with);
    BSGSResult b1 = e1.find_generators();
    SearchEngine e2(n, rs, without);
    BSGSResult b2 = e2.find_generators();

    PermGroup g1(n, b1.strong_generators), g2(n, b2.strong_generators);
    CHECK(g1.order() == g2.order());
    for (const Permutation& x : g2.generators()) CHECK(g1.contains(x));
    CHECK(verify_bsgs(n, b1, g1.order()));
    CHECK(verify_bsgs(n, b2, g2.order()));

    // the search result equals the brute-force filter
    std::size_t expected = 0;
    for (const Permutation& p : all_permutations(n)) {
      std::vector<int> img;
      for (int x : set) img.push_back(p[x]);
      std::sort(img.begin(), img.end());
      if (img == set && g.contains(p)) ++expected;
    }
    CHECK(g1.order().as_u64() == expected);
  }
}

TEST_CASE("node accounting") {
  // solved at the root with an empty estimate: mismatched set sizes are
  // caught by the labels alone
  SearchEngine eng(4, {set_refiner(4, {0}, {0, 1})}, checked(ApproxKind::Strong));
  CHECK(eng.find_all().empty());
  CHECK(eng.stats().nodes == 0);

  // the exact approximator proves distinct cycle types empty at the root
  auto off = perm_conjugacy_refiner(Permutation::parse("(1,2)", 4),
                                    Permutation::parse("(1,2,3)", 4));
  SearchEngine enge(4, {off}, checked(ApproxKind::Exact));
  CHECK(enge.find_all().empty());
  CHECK(enge.stats().nodes == 0);

  // solved at the root with a singleton estimate
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < 4; ++i) singles.push_back({i});
  SearchEngine eng2(4, {list_of_subsets_refiner(4, singles, singles)},
                    checked(ApproxKind::Strong));
  CHECK(eng2.find_all().size() == 1);
  CHECK(eng2.stats().nodes == 0);
  CHECK(eng2.stats().leaves == 1);
}

TEST_CASE("identical runs are identical") {
  Permutation g = Permutation::parse("(1,2)(3,6,5)", 6);
  SearchEngine e1(6, {perm_conjugacy_refiner(g, g)}, checked(ApproxKind::Weak));
  SearchEngine e2(6, {perm_conjugacy_refiner(g, g)}, checked(ApproxKind::Weak));
  auto r1 = e1.find_all();
  auto r2 = e2.find_all();
  CHECK(perm_set(r1) == perm_set(r2));
  CHECK(e1.stats().nodes == e2.stats().nodes);
  CHECK(e1.stats().leaves == e2.stats().leaves);
  CHECK(e1.stats().refiner_calls == e2.stats().refiner_calls);
  CHECK(e1.stats().approx_calls == e2.stats().approx_calls);
}

TEST_CASE("left trace is recorded and replayable") {
  Permutation g = Permutation::parse("(1,2)(3,6,5)", 6);
  // check_invariants recomputes every replayed left append and compares
  SearchEngine eng(6, {perm_conjugacy_refiner(g, g), set_refiner(6, {0, 1}, {0, 1})},
                   checked(ApproxKind::Strong));
  eng.find_all();
  // the root pass applied both refiners to the left stack
  const DigraphStack& first = eng.left_trace_replay(0, 0);
  CHECK(first.size() >= 1);
  CHECK_THROWS_AS(eng.left_trace_replay(99, 0), std::logic_error);
}

TEST_CASE("coset intersections through the group driver") {
  // intersection of two cosets with a known representative
  PermGroup h1(4, {Permutation::parse("(1,2)", 4)});
  PermGroup h2(4, {Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)});
  Permutation rep = Permutation::parse("(1,3)(2,4)", 4);
  SearchEngine eng(4,
                   {coset_refiner(h1, rep, GroupStrategy::OrbitalGraphs),
                    coset_refiner(h2, rep, GroupStrategy::OrbitalGraphs)},
                   checked(ApproxKind::Strong));
  SearchEngine::CosetSolution sol = eng.find_coset();
  REQUIRE(!sol.empty);
  // the result describes h1 * rep: group part h1, shifted by the found rep
  PermGroup part(4, sol.group.strong_generators);
  CHECK(part.order() == h1.order());
  std::set<std::vector<int>> got;
  for (const Permutation& p : all_permutations(4))
    if (part.contains(compose(p, sol.representative->inverse()))) got.insert(p.images());
  std::set<std::vector<int>> expect;
  for (const Permutation& p : all_permutations(4))
    if (h1.contains(compose(p, rep.inverse()))) expect.insert(p.images());
  CHECK(got == expect);

  // empty intersection: same groups, incompatible representatives
  SearchEngine eng2(4,
                    {coset_refiner(h1, rep, GroupStrategy::OrbitalGraphs),
                     coset_refiner(h1, Permutation(4), GroupStrategy::OrbitalGraphs)},
                    checked(ApproxKind::Strong));
  CHECK(eng2.find_coset().empty);
}

TEST_CASE("refine leaves solutions untouched") {
  // solution preservation: the filtered solution set before and after a
  // full search agrees with brute force on mixed constraint problems
  Rng rng(73);
  for (int i = 0; i < 30; ++i) {
    int n = 4 + static_cast<int>(rng.below(3));
    Permutation p = random_perm(n, rng);
    std::vector<int> set;
    for (int x = 0; x < n; ++x)
      if (rng.below(2)) set.push_back(x);
    std::vector<RefinerPtr> rs{perm_conjugacy_refiner(p, p), set_refiner(n, set, set)};
    for (ApproxKind kind : {ApproxKind::Weak, ApproxKind::Strong}) {
      SearchEngine eng(n, rs, checked(kind));
      auto got = perm_set(eng.find_all());
      std::set<std::vector<int>> expect;
      for (const Permutation& q : all_permutations(n)) {
        std::vector<int> img;
        for (int x : set) img.push_back(q[x]);
        std::sort(img.begin(), img.end());
        if (img == set && conjugate(p, q) == p) expect.insert(q.images());
      }
      CHECK(got == expect);
    }
  }
}
