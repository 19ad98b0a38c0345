#pragma once

#include "dgs/equitable.hpp"
#include "dgs/refiner.hpp"
#include "dgs/stack.hpp"

namespace dgs {

// One node split: every child shares the same left extension [Gamma_alpha];
// the right extensions are [Gamma_beta] for beta over the listed points.
struct SplitResult {
  int alpha = -1;
  std::vector<int> betas;  // enumeration order of the children
  DigraphStack left_extension{0};
  std::vector<std::pair<DigraphStack, DigraphStack>> pairs() const;
};

// The point to individualise: the smallest minimum over the estimate
// group's orbits of minimal size at least 2.  Requires |estimate| >= 2.
int split_point(const IsoEstimate& est);

// The fixed-point splitter.  Children are enumerated ascending by beta over
// the transported orbit of alpha, except that when both stacks are equal
// the stabilised child (beta = alpha) comes first.
SplitResult split(const DigraphStack& s, const DigraphStack& t, const IsoEstimate& est);

}  // namespace dgs
