#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/perm.hpp"
#include "dgs/perm_group.hpp"
#include "dgs/refiner.hpp"
#include "dgs/search.hpp"

namespace dgs {

enum class Goal { All, Single, Group };
enum class Mode { Leon, Orbital, Strong, Full };

std::string to_string(Goal g);
std::string to_string(Mode m);
Goal goal_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);

// One constraint of a search problem.  Point sets are 0-based here; the
// JSON form is 1-based.
struct Constraint {
  enum class Kind {
    SetStab,
    SetTransport,
    ListStab,
    ListTransport,
    SetsStab,
    SetsTransport,
    DisjointStab,
    DisjointTransport,
    Centralise,
    Conjugate,
    DigraphAuto,
    DigraphIso,
    InGroup,
    InCoset,
  };
  Kind kind;
  std::vector<std::vector<int>> from_sets, to_sets;           // subset families
  std::optional<Permutation> from_perm, to_perm;              // centralise/conjugate/coset rep
  std::optional<LabelledDigraph> from_digraph, to_digraph;    // digraph constraints
  std::vector<Permutation> generators;                        // in_group/in_coset
  std::optional<GroupStrategy> strategy;                      // in_group/in_coset override
};

struct ProblemSpec {
  int degree = 0;
  std::vector<Constraint> constraints;
  Goal goal = Goal::All;
  Mode mode = Mode::Strong;
  std::uint64_t seed = 0;
};

ProblemSpec parse_problem_spec(const std::string& json_text);
std::string problem_spec_to_json(const ProblemSpec& spec);

// Digraph JSON form: {"n": int, "arcs": [[u,v],...], "vertex_labels": [...],
// "arc_labels": [...]} with 1-based vertices; omitted labels default to 0.
LabelledDigraph digraph_from_json_text(const std::string& json_text);
std::string digraph_to_json_text(const LabelledDigraph& g);

// Build the refiners for a spec under its mode: leon forces the orbit
// strategy for group constraints and strips arcs from constraint digraphs;
// the approximator per mode is weak/weak/strong/exact.
std::vector<RefinerPtr> build_refiners(const ProblemSpec& spec);
ApproxKind approx_kind(Mode mode);

struct RunReport {
  ProblemSpec spec;
  SearchStats stats;
  double millis = 0;
  // goal-dependent payloads
  std::vector<Permutation> elements;          // goal = all
  std::optional<Permutation> single;          // goal = single
  std::optional<BSGSResult> group;            // goal = group
  std::optional<Permutation> representative;  // goal = group over cosets
  std::optional<BigNat> group_order;
  bool oracle_checked = false;
  bool oracle_agrees = false;
};

RunReport run(const ProblemSpec& spec, const SearchOptions& extra = {});
std::string report_to_json(const RunReport& report);

// Brute force over Sym(n): filters all n! permutations through direct
// semantic tests of each constraint, never touching the refiners.
std::vector<Permutation> oracle(const ProblemSpec& spec);
bool oracle_matches(const ProblemSpec& spec, const RunReport& report);

std::vector<Permutation> all_permutations(int degree);  // degree <= 8

// Semantic membership test for one constraint (used by the oracle).
bool constraint_holds(const Constraint& c, const Permutation& p);

}  // namespace dgs
