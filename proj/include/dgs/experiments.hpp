#pragma once

#include <string>
#include <vector>

#include "dgs/probspec.hpp"
#include "dgs/rng.hpp"

namespace dgs {

struct ExperimentRow {
  std::uint64_t seed = 0;
  Mode mode = Mode::Strong;
  std::uint64_t nodes = 0;
  bool zero = false;
  std::string order;  // result group order (group goals), empty otherwise
  bool empty = false; // intersection emptiness (single goals)
  double ms = 0;
};

std::string csv_header();  // seed,mode,nodes,zero,order,empty,ms
std::string to_csv(const ExperimentRow& row);
std::string to_csv(const std::vector<ExperimentRow>& rows);

// The n x n grid group on n^2 points: row permutations and column
// permutations acting coordinatewise; order (n!)^2.
PermGroup make_grid_group(int n);

// Stabiliser problems inside the grid group:
//   kind 1: a random subset of size floor(n^2/2)
//   kind 2: a random subset with floor(n/2) entries per grid row
//   kind 3: a random unordered partition into two cells of size n^2/2
ProblemSpec grid_problem(int n, int kind, Mode mode, std::uint64_t instance_seed);
std::vector<ExperimentRow> grid_experiments(int n, int count, int kind, Mode mode,
                                            std::uint64_t seed);

// A proper (k,n)-subdirect product: a subgroup of a direct product of k
// random transitive groups of degree n that projects onto every factor and
// sits properly inside the product.
PermGroup make_subdirect(int k, int n, Rng& rng);

// Transitive groups of degree n from the built-in catalogue, as generator
// lists on n points.
std::vector<std::vector<Permutation>> transitive_catalogue(int n);

// Coset-intersection emptiness tests between pairs of subdirect products,
// with representatives preserving the orbit (block) structure.  One row per
// instance and mode; cross-checked against the oracle when k*n <= 8.
std::vector<ExperimentRow> subdirect_experiments(int k, int n, int count, std::uint64_t seed);

}  // namespace dgs
