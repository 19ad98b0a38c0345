#include <algorithm>
#include <set>
#include <stdexcept>

#include "dgs/probspec.hpp"

namespace dgs {

std::vector<Permutation> all_permutations(int degree) {
  if (degree > 8) throw std::invalid_argument("all_permutations: degree above the oracle bound");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

// full element enumeration by product closure, independent of the chain
std::set<std::vector<int>> closure(int degree, const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(queue.front().images());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation prod = compose(queue[head], g);
      if (seen.insert(prod.images()).second) queue.push_back(prod);
    }
  }
  return seen;
}

std::vector<std::vector<int>> sorted_family(const std::vector<std::vector<int>>& sets,
                                            bool sort_outer) {
  std::vector<std::vector<int>> out = sets;
  for (auto& s : out) std::sort(s.begin(), s.end());
  if (sort_outer) std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> family_image(const std::vector<std::vector<int>>& sets,
                                           const Permutation& p, bool sort_outer) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<int> img;
    img.reserve(s.size());
    for (int x : s) img.push_back(p[x]);
    std::sort(img.begin(), img.end());
    out.push_back(std::move(img));
  }
  if (sort_outer) std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool constraint_holds(const Constraint& c, const Permutation& p) {
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::SetStab:
    case K::ListStab:
      return family_image(c.from_sets, p, false) == sorted_family(c.from_sets, false);
    case K::SetTransport:
    case K::ListTransport:
      return family_image(c.from_sets, p, false) == sorted_family(c.to_sets, false);
    case K::SetsStab:
    case K::DisjointStab:
      return family_image(c.from_sets, p, true) == sorted_family(c.from_sets, true);
    case K::SetsTransport:
    case K::DisjointTransport:
      return family_image(c.from_sets, p, true) == sorted_family(c.to_sets, true);
    case K::Centralise:
      return conjugate(*c.from_perm, p) == *c.from_perm;
    case K::Conjugate:
      return conjugate(*c.from_perm, p) == *c.to_perm;
    case K::DigraphAuto:
      return c.from_digraph->apply_perm(p) == *c.from_digraph;
    case K::DigraphIso:
      return c.from_digraph->apply_perm(p) == *c.to_digraph;
    case K::InGroup: {
      auto elems = closure(p.degree(), c.generators);
      return elems.count(p.images()) != 0;
    }
    case K::InCoset: {
      auto elems = closure(p.degree(), c.generators);
      return elems.count(compose(p, c.to_perm->inverse()).images()) != 0;
    }
  }
  return false;
}

std::vector<Permutation> oracle(const ProblemSpec& spec) {
  if (spec.degree > 8) throw std::invalid_argument("oracle: degree above the oracle bound");

  // precompute element sets for group/coset constraints
  std::vector<std::set<std::vector<int>>> closures(spec.constraints.size());
  for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
    const Constraint& c = spec.constraints[i];
    if (c.kind == Constraint::Kind::InGroup || c.kind == Constraint::Kind::InCoset)
      closures[i] = closure(spec.degree, c.generators);
  }

  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(spec.degree)) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < spec.constraints.size(); ++i) {
      const Constraint& c = spec.constraints[i];
      if (c.kind == Constraint::Kind::InGroup) {
        ok = closures[i].count(p.images()) != 0;
      } else if (c.kind == Constraint::Kind::InCoset) {
        ok = closures[i].count(compose(p, c.to_perm->inverse()).images()) != 0;
      } else {
        ok = constraint_holds(c, p);
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

bool oracle_matches(const ProblemSpec& spec, const RunReport& report) {
  std::vector<Permutation> expected = oracle(spec);
  std::set<std::vector<int>> expected_set;
  for (const Permutation& p : expected) expected_set.insert(p.images());

  switch (spec.goal) {
    case Goal::All: {
      if (report.elements.size() != expected.size()) return false;
      std::set<std::vector<int>> got;
      for (const Permutation& p : report.elements) got.insert(p.images());
      return got == expected_set;
    }
    case Goal::Single: {
      if (!report.single.has_value()) return expected.empty();
      return expected_set.count(report.single->images()) != 0;
    }
    case Goal::Group: {
      if (!report.group.has_value()) return expected.empty();
      std::set<std::vector<int>> got = closure(spec.degree, report.group->strong_generators);
      if (report.representative.has_value()) {
        std::set<std::vector<int>> shifted;
        for (const auto& images : got)
          shifted.insert(
              compose(Permutation::from_images(images), *report.representative).images());
        got = std::move(shifted);
      }
      return got == expected_set;
    }
  }
  return false;
}

}  // namespace dgs
