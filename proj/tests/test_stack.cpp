#include "doctest.h"
#include "helpers.hpp"

#include "dgs/stack.hpp"

using namespace dgs;
using namespace dgs::testing;

TEST_CASE("append") {
  DigraphStack s = example_stack_six();
  DigraphStack empty(6);
  CHECK(s.append(empty) == s);
  CHECK(s.append(s).size() == 2 * s.size());

  Rng rng(21);
  DigraphStack a = random_stack(5, rng), b = random_stack(5, rng);
  DigraphStack joined = a.append(b);
  CHECK(joined.size() == a.size() + b.size());
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(joined[a.size() + i] == b[i]);
  CHECK_THROWS_AS(a.append(DigraphStack(6)), std::invalid_argument);
}

TEST_CASE("entrywise action") {
  DigraphStack empty(6);
  Rng rng(22);
  for (int i = 0; i < 10; ++i) CHECK(empty.apply_perm(random_perm(6, rng)) == empty);

  // (1 2) changes only the first entry of the worked-example stack
  DigraphStack s = example_stack_six();
  Permutation swap12 = Permutation::parse("(1,2)", 6);
  DigraphStack image = s.apply_perm(swap12);
  CHECK(!(image[0] == s[0]));
  CHECK(image[1] == s[1]);
  CHECK(image[2] == s[2]);

  for (int i = 0; i < 20; ++i) {
    DigraphStack st = random_stack(6, rng);
    Permutation g = random_perm(6, rng), h = random_perm(6, rng);
    CHECK(st.apply_perm(g).apply_perm(h) == st.apply_perm(compose(g, h)));
  }
}

TEST_CASE("squash of the empty stack") {
  LabelledDigraph q = squash(DigraphStack(4));
  CHECK(q.arc_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK(q.vertex_label(v) == Label::seq({}));
}

TEST_CASE("squash of the worked-example stack") {
  DigraphStack s = example_stack_six();
  LabelledDigraph q = squash(s);

  CHECK(q.arc_count() == 10);
  CHECK(q.vertex_label(0) == Label::seq({white(), black(), white()}));
  CHECK(q.vertex_label(0) == q.vertex_label(1));
  CHECK(q.vertex_label(2) == Label::seq({white(), white(), white()}));
  CHECK(q.vertex_label(4) == Label::seq({white(), white(), black()}));

  const Label* l51 = q.arc_label(4, 0);  // arc (5, 1)
  REQUIRE(l51 != nullptr);
  CHECK(*l51 == Label::seq({solid(), Label::hash_mark(), dashed()}));

  std::set<Label> distinct(q.arc_labels().begin(), q.arc_labels().end());
  CHECK(distinct.size() == 5);
}

TEST_CASE("squash commutes with the group action") {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    DigraphStack s = random_stack(5, rng);
    Permutation g = random_perm(5, rng);
    CHECK(squash(s.apply_perm(g)) == squash(s).apply_perm(g));
  }
}

TEST_CASE("squashing preserves the isomorphism set") {
  Rng rng(24);
  for (int i = 0; i < 40; ++i) {
    int n = 4 + static_cast<int>(rng.below(2));
    DigraphStack s = random_stack(n, rng, 2);
    // half the time, compare against an isomorphic image
    DigraphStack t = rng.below(2) ? s.apply_perm(random_perm(n, rng)) : random_stack(n, rng, 2);
    std::vector<Permutation> stack_iso = brute_iso(s, t);
    std::vector<Permutation> squash_iso = brute_iso(squash(s), squash(t));
    CHECK(perm_set(stack_iso) == perm_set(squash_iso));
  }
  // stacks of different lengths never squash to isomorphic digraphs
  DigraphStack one(4, {LabelledDigraph(4)});
  DigraphStack two(4, {LabelledDigraph(4), LabelledDigraph(4)});
  CHECK(brute_iso(squash(one), squash(two)).empty());
}

TEST_CASE("appending entries can only shrink the automorphism set") {
  Rng rng(25);
  for (int i = 0; i < 20; ++i) {
    DigraphStack s = random_stack(5, rng, 2);
    DigraphStack u = random_stack(5, rng, 1);
    auto before = perm_set(brute_iso(s, s));
    auto after = perm_set(brute_iso(s.append(u), s.append(u)));
    for (const auto& p : after) CHECK(before.count(p) == 1);
  }
}
