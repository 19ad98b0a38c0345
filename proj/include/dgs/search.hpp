#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dgs/canon.hpp"
#include "dgs/equitable.hpp"
#include "dgs/refiner.hpp"
#include "dgs/splitter.hpp"

namespace dgs {

enum class ApproxKind { Weak, Strong, Exact };

struct SearchOptions {
  ApproxKind approx = ApproxKind::Strong;
  bool prune_gens_orbit = true;   // the <X>-orbit pruning of the generator search
  bool check_invariants = false;  // replay/shrinkage assertions, for tests
};

struct SearchStats {
  std::uint64_t nodes = 0;          // recursive invocations, root excluded
  std::uint64_t leaves = 0;         // singleton estimates tested
  std::uint64_t refiner_calls = 0;  // refiner function applications
  std::uint64_t approx_calls = 0;   // approximator evaluations
};

struct BSGSResult {
  std::vector<int> base;  // split points, i.e. the base realised as points
  std::vector<Permutation> strong_generators;
};

// Rebuild a transversal-only chain over the base from the generators alone
// and compare orders; equality certifies that the generators are strong.
bool verify_bsgs(int degree, const BSGSResult& result, const BigNat& expected_order);

// The backtrack search: repeatedly refines a pair of labelled digraph
// stacks, tests single candidates at leaves, and splits on a fixed point
// otherwise.  Every branch applies the same sequence of moves to its
// left-hand stack, so left refiner outputs and split data are recorded per
// depth and replayed, and classification work is memoised by content.
class SearchEngine {
public:
  SearchEngine(int degree, std::vector<RefinerPtr> refiners, SearchOptions opts = {});

  std::vector<Permutation> find_all();
  std::optional<Permutation> find_one();
  BSGSResult find_generators();

  struct CosetSolution {
    bool empty = true;
    std::optional<Permutation> representative;
    BSGSResult group;
  };
  // Intersection of cosets described as a coset: locate one element, shift
  // every constraint by it, and run the generator search on the groups.
  CosetSolution find_coset();

  const SearchStats& stats() const { return stats_; }
  int degree() const { return degree_; }

  // Approximator and fixed-point approximator configured for this engine;
  // exposed for refiners and for the test suite.
  IsoEstimate approximate(const DigraphStack& s, const DigraphStack& t);
  std::vector<int> fixed_points(const DigraphStack& s);

  // The Refine procedure on its own: repeatedly applies every refiner to
  // both stacks, keeping passes only while the estimate strictly shrinks.
  // Resets per-search state first.
  std::pair<DigraphStack, DigraphStack> refine_pair(const DigraphStack& s,
                                                    const DigraphStack& t);

  // Recorded left-hand refiner output at the given depth and refinement
  // step; throws when the entry the contract guarantees is missing.
  const DigraphStack& left_trace_replay(std::size_t depth, std::size_t step) const;

private:
  struct TraceStep {
    std::size_t refiner;
    DigraphStack left_out;
  };
  struct DepthTrace {
    std::vector<TraceStep> steps;        // kept refinements, in application order
    std::vector<std::size_t> pass_ends;  // prefix lengths of completed passes
    bool complete = false;               // the unproductive final pass was observed
    bool has_split = false;
    int alpha = -1;
    std::vector<int> orbit;  // of alpha under the node estimate's group
  };

  struct RefineOutcome {
    DigraphStack s;
    DigraphStack t;
    IsoEstimate est;
  };

  void reset();
  RefineOutcome refine(DigraphStack s, DigraphStack t, std::size_t depth, bool symmetric);
  bool search_rec(const DigraphStack& s, const DigraphStack& t, std::size_t depth,
                  const BigNat* parent_size, bool single, std::vector<Permutation>& out);
  std::vector<Permutation> gens_rec(const DigraphStack& s, std::size_t depth);

  // content-addressed memos
  const Classification& memo_classification(const LabelledDigraph& g);
  const LabelledDigraph& memo_squash(const DigraphStack& s);
  struct ExactEntry {
    CanonResult canon;
    LabelledDigraph form;
  };
  const ExactEntry& memo_canon(const LabelledDigraph& g);

  IsoEstimate approx_pair(const DigraphStack& s, const DigraphStack& t);
  IsoEstimate approx_sym(const DigraphStack& s);
  WeakSide weak_side_of(const DigraphStack& s);

  SplitResult node_split(const DigraphStack& s, const DigraphStack& t, const IsoEstimate& est,
                         std::size_t depth);

  int degree_;
  std::vector<RefinerPtr> refiners_;
  SearchOptions opts_;
  SearchStats stats_;

  std::vector<DepthTrace> trace_;
  std::vector<int> base_;  // populated by find_generators

  struct DigraphKeyHash {
    std::size_t operator()(const LabelledDigraph& g) const { return g.hash(); }
  };
  struct StackKeyHash {
    std::size_t operator()(const DigraphStack& s) const { return s.hash(); }
  };
  std::unordered_map<LabelledDigraph, Classification, DigraphKeyHash> cls_memo_;
  std::unordered_map<LabelledDigraph, ExactEntry, DigraphKeyHash> canon_memo_;
  std::unordered_map<DigraphStack, LabelledDigraph, StackKeyHash> squash_memo_;

  FixedFn fixed_fn_;
};

}  // namespace dgs
