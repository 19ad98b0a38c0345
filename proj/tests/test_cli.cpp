#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

#include "dgs/experiments.hpp"
#include "dgs/probspec.hpp"

using namespace dgs;
using namespace dgs::testing;

TEST_CASE("problem specs round-trip through JSON") {
  std::string text = R"json({
    "degree": 6,
    "goal": "group",
    "mode": "orbital",
    "seed": 99,
    "constraints": [
      {"type": "set_stab", "set": [1, 2]},
      {"type": "list_transport", "from": [[1, 3], [2]], "to": [[4, 5], [6]]},
      {"type": "centralise", "perm": "(1,2)(3,6,5)"},
      {"type": "in_group", "generators": ["(1,2)", "(1,2,3,4,5,6)"], "strategy": "orbits"},
      {"type": "in_coset", "generators": ["(1,2)"], "representative": "(3,4)"}
    ]
  })json";
  ProblemSpec spec = parse_problem_spec(text);
  CHECK(spec.degree == 6);
  CHECK(spec.goal == Goal::Group);
  CHECK(spec.mode == Mode::Orbital);
  CHECK(spec.seed == 99);
  REQUIRE(spec.constraints.size() == 5);
  CHECK(spec.constraints[0].from_sets == std::vector<std::vector<int>>{{0, 1}});
  CHECK(spec.constraints[3].strategy == GroupStrategy::Orbits);

  ProblemSpec again = parse_problem_spec(problem_spec_to_json(spec));
  CHECK(problem_spec_to_json(again) == problem_spec_to_json(spec));

  CHECK_THROWS_AS(parse_problem_spec(R"json({"degree": 3, "constraints": [{"type": "nope"}]})json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_spec(R"json({"degree": 3,
    "constraints": [{"type": "set_stab", "set": [0]}]})json"),
                  std::invalid_argument);  // points are 1-based
}

TEST_CASE("digraph JSON round-trip") {
  LabelledDigraph gamma = example_digraph_five();
  LabelledDigraph back = digraph_from_json_text(digraph_to_json_text(gamma));
  CHECK(back == gamma);

  LabelledDigraph defaulted = digraph_from_json_text(R"json({"n": 3, "arcs": [[1, 2]]})json");
  CHECK(defaulted.vertex_label(0) == Label::integer(0));
  CHECK(*defaulted.arc_label(0, 1) == Label::integer(0));
}

TEST_CASE("reports carry verifiable results") {
  ProblemSpec spec = parse_problem_spec(R"json({
    "degree": 6, "goal": "group", "mode": "strong",
    "constraints": [{"type": "centralise", "perm": "(1,2)(3,6,5)"}]})json");
  RunReport report = run(spec);
  REQUIRE(report.group.has_value());
  CHECK(report.group_order->as_u64() == 6);
  CHECK(oracle_matches(spec, report));
  // every emitted generator is a member of the described set
  for (const Permutation& g : report.group->strong_generators)
    CHECK(constraint_holds(spec.constraints[0], g));
  std::string json = report_to_json(report);
  CHECK(json.find("\"order\": \"6\"") != std::string::npos);

  // parse the emitted report back and re-verify membership of every
  // listed generator
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed.at("degree").get<int>() == 6);
  REQUIRE(parsed.at("result").contains("generators"));
  int gens_seen = 0;
  for (const auto& gs : parsed.at("result").at("generators")) {
    Permutation g = Permutation::parse(gs.get<std::string>(), 6);
    CHECK(constraint_holds(spec.constraints[0], g));
    ++gens_seen;
  }
  CHECK(gens_seen > 0);
}

TEST_CASE("mode changes never change the result") {
  Rng rng(81);
  for (int i = 0; i < 10; ++i) {
    ProblemSpec spec;
    spec.degree = 5;
    Constraint c;
    c.kind = Constraint::Kind::SetsStab;
    std::vector<std::vector<int>> fam;
    for (int s = 0; s < 2; ++s) {
      std::vector<int> set;
      for (int x = 0; x < 5; ++x)
        if (rng.below(2)) set.push_back(x);
      if (!set.empty()) fam.push_back(set);
    }
    if (fam.empty()) continue;
    c.from_sets = fam;
    spec.constraints.push_back(c);
    spec.goal = Goal::All;

    std::set<std::vector<int>> first;
    bool first_set = false;
    for (Mode mode : {Mode::Leon, Mode::Orbital, Mode::Strong, Mode::Full}) {
      spec.mode = mode;
      RunReport report = run(spec);
      auto got = perm_set(report.elements);
      if (!first_set) {
        first = got;
        first_set = true;
      } else {
        CHECK(got == first);
      }
    }
  }
}

TEST_CASE("oracle matches the worked examples") {
  // the list-of-subsets stabiliser has the four known elements
  ProblemSpec spec = parse_problem_spec(R"json({
    "degree": 6, "goal": "all", "mode": "strong",
    "constraints": [{"type": "list_stab", "list": [[1,3,6],[3,5],[2,4],[2,3,4]]}]})json");
  auto elems = oracle(spec);
  CHECK(perm_set(elems) ==
        perm_set({Permutation(6), Permutation::parse("(1,6)", 6),
                  Permutation::parse("(2,4)", 6), Permutation::parse("(1,6)(2,4)", 6)}));

  ProblemSpec tiny = parse_problem_spec(R"json({
    "degree": 4, "goal": "all", "mode": "strong",
    "constraints": [{"type": "set_stab", "set": [1, 2]}]})json");
  CHECK(oracle(tiny).size() == 4);

  ProblemSpec too_big;
  too_big.degree = 9;
  CHECK_THROWS_AS(oracle(too_big), std::invalid_argument);
}

TEST_CASE("grid groups") {
  CHECK(make_grid_group(2).order().as_u64() == 4);
  PermGroup g3 = make_grid_group(3);
  CHECK(g3.order().as_u64() == 36);
  CHECK(g3.orbits().size() == 1);  // transitive
  CHECK(make_grid_group(4).order().as_u64() == 576);
}

TEST_CASE("grid problems stay inside the grid group") {
  PermGroup grid = make_grid_group(3);
  for (int kind : {1, 2}) {
    ProblemSpec spec = grid_problem(3, kind, Mode::Strong, 12345);
    RunReport report = run(spec);
    REQUIRE(report.group.has_value());
    for (const Permutation& g : report.group->strong_generators) CHECK(grid.contains(g));
  }
  CHECK_THROWS_AS(grid_problem(3, 3, Mode::Strong, 1), std::invalid_argument);  // odd n
  CHECK_THROWS_AS(grid_problem(4, 7, Mode::Strong, 1), std::invalid_argument);
}

TEST_CASE("subdirect products") {
  // (2,2): the only proper subdirect product is the diagonal, order 2
  Rng rng(82);
  PermGroup h = make_subdirect(2, 2, rng);
  CHECK(h.order().as_u64() == 2);
  CHECK(h.contains(Permutation::parse("(1,2)(3,4)", 4)));

  // projections are transitive on every block, and the group is proper
  for (int i = 0; i < 25; ++i) {
    int k = 2 + static_cast<int>(rng.below(2));
    int n = 2 + static_cast<int>(rng.below(3));
    PermGroup sd = make_subdirect(k, n, rng);
    auto orbits = sd.orbits();
    REQUIRE(orbits.size() == static_cast<std::size_t>(k));
    for (const auto& o : orbits) CHECK(o.size() == static_cast<std::size_t>(n));
  }

  // (2,3)-subdirect products of two copies of S3 have order 6 or 18
  for (int i = 0; i < 20; ++i) {
    PermGroup sd = make_subdirect(2, 3, rng);
    std::uint64_t order = sd.order().as_u64();
    std::uint64_t p1 = 1, p2 = 1;
    {
      std::vector<Permutation> a, b;
      for (const Permutation& g : sd.generators()) {
        std::vector<int> ia(3), ib(3);
        for (int x = 0; x < 3; ++x) {
          ia[static_cast<std::size_t>(x)] = g[x];
          ib[static_cast<std::size_t>(x)] = g[x + 3] - 3;
        }
        a.push_back(Permutation::from_images(ia));
        b.push_back(Permutation::from_images(ib));
      }
      p1 = StabChain::build(3, a).order().as_u64();
      p2 = StabChain::build(3, b).order().as_u64();
    }
    CHECK(order < p1 * p2);  // proper
    if (p1 == 6 && p2 == 6) CHECK((order == 6 || order == 18));
  }
}

TEST_CASE("experiment CSV is deterministic apart from timing") {
  auto strip_ms = [](std::vector<ExperimentRow> rows) {
    for (ExperimentRow& r : rows) r.ms = 0;
    return to_csv(rows);
  };
  CHECK(strip_ms(grid_experiments(3, 4, 1, Mode::Strong, 5)) ==
        strip_ms(grid_experiments(3, 4, 1, Mode::Strong, 5)));
  CHECK(strip_ms(subdirect_experiments(2, 3, 3, 5)) == strip_ms(subdirect_experiments(2, 3, 3, 5)));
  CHECK(csv_header() == "seed,mode,nodes,zero,order,empty,ms");
}
