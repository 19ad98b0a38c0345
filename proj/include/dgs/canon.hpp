#pragma once

#include "dgs/equitable.hpp"
#include "dgs/stack.hpp"

namespace dgs {

struct CanonResult {
  Permutation canonical_perm;  // g with Gamma^g in canonical position
  PermGroup automorphisms;     // Aut(Gamma) induced by Sym(Omega)
};

// Canonical labelling by individualisation-refinement over the equitable
// vertex labelling, with pruning by the automorphisms found along the way.
// The image of a digraph under its canonical permutation depends only on
// the digraph's isomorphism class.
CanonResult canonise(const LabelledDigraph& g);

// The exact approximator: compares canonical forms of the squashed stacks
// and returns Aut(Squash(S)) * g * h^-1, which is precisely Iso(S, T).
IsoEstimate exact_approx(const DigraphStack& s, const DigraphStack& t);
IsoEstimate exact_estimate(const DigraphStack& s, const DigraphStack& t, const CanonResult& cs,
                           const LabelledDigraph& s_form, const CanonResult& ct,
                           const LabelledDigraph& t_form);

// Points fixed by Aut(S), read off in canonical order and transported back.
std::vector<int> exact_fixed(const DigraphStack& s);
std::vector<int> exact_fixed_from(const CanonResult& c);

}  // namespace dgs
