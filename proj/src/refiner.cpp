#include "dgs/refiner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dgs {

namespace {

std::vector<int> sorted_unique(std::vector<int> pts, int degree, const char* what) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 0 || pts[i] >= degree) throw std::invalid_argument(std::string(what) + ": point out of range");
    if (i > 0 && pts[i] == pts[i - 1]) throw std::invalid_argument(std::string(what) + ": duplicate point");
  }
  return pts;
}

std::vector<int> image_of(const std::vector<int>& pts, const Permutation& p) {
  std::vector<int> out;
  out.reserve(pts.size());
  for (int x : pts) out.push_back(p[x]);
  return out;
}

std::vector<int> sorted_image(const std::vector<int>& pts, const Permutation& p) {
  std::vector<int> out = image_of(pts, p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted_images(const std::vector<std::vector<int>>& sets,
                                            const Permutation& p) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(sorted_image(s, p));
  return out;
}

// A refiner whose two functions return fixed stacks, with an optional
// fixed-point companion recomputed from the current stack.
class ConstantRefiner : public Refiner {
public:
  ConstantRefiner(std::string name, bool is_group, DigraphStack left, DigraphStack right,
                  std::function<bool(const Permutation&)> member)
      : Refiner(std::move(name), is_group),
        left_(std::move(left)),
        right_(std::move(right)),
        member_(std::move(member)) {}

  // companion: (degree, fixed points) -> extra digraph, same on both sides
  // up to the family it was built from
  void set_companion(std::function<LabelledDigraph(const std::vector<int>&)> left_companion,
                     std::function<LabelledDigraph(const std::vector<int>&)> right_companion) {
    left_companion_ = std::move(left_companion);
    right_companion_ = std::move(right_companion);
  }

  DigraphStack apply_left(const DigraphStack& s, const FixedFn& fixed, std::size_t) override {
    return apply(left_, left_companion_, s, fixed);
  }
  DigraphStack apply_right(const DigraphStack& t, const FixedFn& fixed, std::size_t) override {
    return apply(right_, right_companion_, t, fixed);
  }
  bool member(const Permutation& p) const override { return member_(p); }

private:
  DigraphStack apply(const DigraphStack& constant,
                     const std::function<LabelledDigraph(const std::vector<int>&)>& companion,
                     const DigraphStack& s, const FixedFn& fixed) const {
    if (!companion) return constant;
    std::vector<int> fx = fixed(s);
    if (fx.empty()) return constant;
    return constant.append(companion(fx));
  }

  DigraphStack left_, right_;
  std::function<bool(const Permutation&)> member_;
  std::function<LabelledDigraph(const std::vector<int>&)> left_companion_, right_companion_;
};

DigraphStack one(const LabelledDigraph& g, const RefinerOptions& opts) {
  return DigraphStack(g.degree(), {opts.strip_arcs ? g.without_arcs() : g});
}

LabelledDigraph set_digraph(int degree, const std::vector<int>& a) {
  std::vector<Label> labels(static_cast<std::size_t>(degree), Label::integer(0));
  for (int x : a) labels[static_cast<std::size_t>(x)] = Label::integer(1);
  return LabelledDigraph(degree).with_vertex_labels(std::move(labels));
}

LabelledDigraph set_of_subsets_digraph(int degree, const std::vector<std::vector<int>>& sets) {
  std::size_t max_size = 0;
  for (const auto& s : sets) max_size = std::max(max_size, s.size());
  const std::uint64_t k = sets.size();

  auto count_label = [&](const std::vector<std::uint64_t>& per_size) {
    std::vector<Label> entries;
    entries.reserve(max_size);
    for (std::size_t i = 0; i < max_size; ++i)
      entries.push_back(Label::count(per_size[i], k));
    return Label::seq(std::move(entries));
  };

  std::vector<std::vector<std::uint64_t>> vertex_counts(
      static_cast<std::size_t>(degree), std::vector<std::uint64_t>(max_size, 0));
  std::map<std::pair<int, int>, std::vector<std::uint64_t>> arc_counts;
  for (const auto& s : sets) {
    const std::size_t size_idx = s.size() - 1;
    for (int x : s) {
      ++vertex_counts[static_cast<std::size_t>(x)][size_idx];
      for (int y : s) {
        if (x == y) continue;
        auto [it, fresh] =
            arc_counts.try_emplace({x, y}, std::vector<std::uint64_t>(max_size, 0));
        ++it->second[size_idx];
      }
    }
  }

  std::vector<Label> vlabels;
  vlabels.reserve(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) vlabels.push_back(count_label(vertex_counts[static_cast<std::size_t>(v)]));
  std::vector<std::pair<int, int>> arcs;
  std::vector<Label> alabels;
  for (auto& [arc, counts] : arc_counts) {
    arcs.push_back(arc);
    alabels.push_back(count_label(counts));
  }
  return LabelledDigraph::make(degree, std::move(arcs), std::move(vlabels), std::move(alabels));
}

LabelledDigraph disjoint_subsets_digraph(int degree, const std::vector<std::vector<int>>& sets) {
  std::vector<Label> vlabels(static_cast<std::size_t>(degree), Label::integer(0));
  std::vector<std::pair<int, int>> arcs;
  for (const auto& s : sets) {
    for (int x : s) {
      vlabels[static_cast<std::size_t>(x)] = Label::integer(1);
      for (int y : s)
        if (x != y) arcs.emplace_back(x, y);
    }
  }
  return LabelledDigraph::make(degree, std::move(arcs), std::move(vlabels));
}

// Fixed-point companion for a family of subsets: each vertex labelled by
// how many family members it shares with each fixed point.  Equivariant for
// the represented transporter set, so the refiner law is preserved.
LabelledDigraph co_membership_digraph(int degree, const std::vector<std::vector<int>>& sets,
                                      const std::vector<int>& fixed) {
  std::vector<std::vector<bool>> in_set(sets.size(), std::vector<bool>(static_cast<std::size_t>(degree), false));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int x : sets[i]) in_set[i][static_cast<std::size_t>(x)] = true;

  std::vector<Label> vlabels;
  vlabels.reserve(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) {
    std::vector<Label> per_fixed;
    per_fixed.reserve(fixed.size());
    for (int f : fixed) {
      std::uint64_t shared = 0;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (in_set[i][static_cast<std::size_t>(v)] && in_set[i][static_cast<std::size_t>(f)]) ++shared;
      per_fixed.push_back(Label::integer(static_cast<std::int64_t>(shared)));
    }
    vlabels.push_back(Label::seq(std::move(per_fixed)));
  }
  return LabelledDigraph(degree).with_vertex_labels(std::move(vlabels));
}

void validate_family(int degree, const std::vector<std::vector<int>>& sets, const char* what) {
  for (const auto& s : sets) sorted_unique(s, degree, what);
}

}  // namespace

LabelledDigraph list_of_subsets_digraph(int degree, const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> member_of(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int x : sets[i]) member_of[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
  std::vector<Label> vlabels;
  vlabels.reserve(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) {
    std::vector<Label> ids;
    ids.reserve(member_of[static_cast<std::size_t>(v)].size());
    for (int i : member_of[static_cast<std::size_t>(v)]) ids.push_back(Label::integer(i));
    vlabels.push_back(Label::seq(std::move(ids)));
  }
  return LabelledDigraph(degree).with_vertex_labels(std::move(vlabels));
}

LabelledDigraph point_digraph(int degree, int alpha) {
  if (alpha < 0 || alpha >= degree) throw std::invalid_argument("point_digraph: point out of range");
  std::vector<Label> labels(static_cast<std::size_t>(degree), Label::integer(0));
  labels[static_cast<std::size_t>(alpha)] = Label::integer(1);
  return LabelledDigraph(degree).with_vertex_labels(std::move(labels));
}

RefinerPtr set_refiner(int degree, const std::vector<int>& a, const std::vector<int>& b,
                       const RefinerOptions& opts) {
  std::vector<int> sa = sorted_unique(a, degree, "set_refiner");
  std::vector<int> sb = sorted_unique(b, degree, "set_refiner");
  bool is_group = sa == sb;
  auto member = [sa, sb](const Permutation& p) { return sorted_image(sa, p) == sb; };
  return std::make_shared<ConstantRefiner>("set", is_group, one(set_digraph(degree, sa), opts),
                                           one(set_digraph(degree, sb), opts), member);
}

RefinerPtr list_of_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                   const std::vector<std::vector<int>>& vs,
                                   const RefinerOptions& opts) {
  validate_family(degree, us, "list_of_subsets_refiner");
  validate_family(degree, vs, "list_of_subsets_refiner");
  std::vector<std::vector<int>> su = us, sv = vs;
  for (auto& s : su) std::sort(s.begin(), s.end());
  for (auto& s : sv) std::sort(s.begin(), s.end());
  bool is_group = su == sv;
  auto member = [su, sv](const Permutation& p) { return sorted_images(su, p) == sv; };
  return std::make_shared<ConstantRefiner>(
      "list_of_subsets", is_group, one(list_of_subsets_digraph(degree, su), opts),
      one(list_of_subsets_digraph(degree, sv), opts), member);
}

RefinerPtr set_of_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                  const std::vector<std::vector<int>>& vs,
                                  const RefinerOptions& opts) {
  validate_family(degree, us, "set_of_subsets_refiner");
  validate_family(degree, vs, "set_of_subsets_refiner");
  std::vector<std::vector<int>> su = us, sv = vs;
  for (auto& s : su) std::sort(s.begin(), s.end());
  for (auto& s : sv) std::sort(s.begin(), s.end());
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  bool is_group = su == sv;
  auto member = [su, sv](const Permutation& p) {
    auto im = sorted_images(su, p);
    std::sort(im.begin(), im.end());
    return im == sv;
  };
  auto r = std::make_shared<ConstantRefiner>(
      "set_of_subsets", is_group, one(set_of_subsets_digraph(degree, su), opts),
      one(set_of_subsets_digraph(degree, sv), opts), member);
  r->set_companion(
      [degree, su](const std::vector<int>& fx) { return co_membership_digraph(degree, su, fx); },
      [degree, sv](const std::vector<int>& fx) { return co_membership_digraph(degree, sv, fx); });
  return r;
}

RefinerPtr disjoint_subsets_refiner(int degree, const std::vector<std::vector<int>>& us,
                                    const std::vector<std::vector<int>>& vs,
                                    const RefinerOptions& opts) {
  auto check_disjoint = [degree](const std::vector<std::vector<int>>& sets) {
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (const auto& s : sets)
      for (int x : s) {
        if (seen[static_cast<std::size_t>(x)])
          throw std::invalid_argument("disjoint_subsets_refiner: members overlap");
        seen[static_cast<std::size_t>(x)] = true;
      }
  };
  validate_family(degree, us, "disjoint_subsets_refiner");
  validate_family(degree, vs, "disjoint_subsets_refiner");
  check_disjoint(us);
  check_disjoint(vs);
  std::vector<std::vector<int>> su = us, sv = vs;
  for (auto& s : su) std::sort(s.begin(), s.end());
  for (auto& s : sv) std::sort(s.begin(), s.end());
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  bool is_group = su == sv;
  auto member = [su, sv](const Permutation& p) {
    auto im = sorted_images(su, p);
    std::sort(im.begin(), im.end());
    return im == sv;
  };
  auto r = std::make_shared<ConstantRefiner>(
      "disjoint_subsets", is_group, one(disjoint_subsets_digraph(degree, su), opts),
      one(disjoint_subsets_digraph(degree, sv), opts), member);
  r->set_companion(
      [degree, su](const std::vector<int>& fx) { return co_membership_digraph(degree, su, fx); },
      [degree, sv](const std::vector<int>& fx) { return co_membership_digraph(degree, sv, fx); });
  return r;
}

RefinerPtr perm_conjugacy_refiner(const Permutation& g, const Permutation& h,
                                  const RefinerOptions& opts) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("perm_conjugacy_refiner: degree mismatch");
  const int degree = g.degree();
  auto functional = [degree](const Permutation& p) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) arcs.emplace_back(x, p[x]);
    return LabelledDigraph::make(degree, std::move(arcs));
  };
  bool is_group = g == h;
  Permutation gc = g, hc = h;
  auto member = [gc, hc](const Permutation& p) { return conjugate(gc, p) == hc; };
  return std::make_shared<ConstantRefiner>("perm_conjugacy", is_group,
                                           one(functional(g), opts), one(functional(h), opts),
                                           member);
}

RefinerPtr digraph_iso_refiner(const LabelledDigraph& g, const LabelledDigraph& d,
                               const RefinerOptions& opts) {
  if (g.degree() != d.degree())
    throw std::invalid_argument("digraph_iso_refiner: degree mismatch");
  bool is_group = g == d;
  LabelledDigraph gc = g, dc = d;
  auto member = [gc, dc](const Permutation& p) { return gc.apply_perm(p) == dc; };
  return std::make_shared<ConstantRefiner>("digraph_iso", is_group, one(g, opts), one(d, opts),
                                           member);
}

namespace {

// Stack encoding the orbit structure of a point stabiliser, per strategy.
DigraphStack encode_stabiliser(int degree, const std::vector<Permutation>& stab_gens,
                               GroupStrategy strategy) {
  std::vector<std::vector<int>> orbits = point_orbits(degree, stab_gens);
  std::vector<std::vector<int>> ordered = orbits;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a[0] < b[0];
                   });
  std::vector<LabelledDigraph> entries{list_of_subsets_digraph(degree, ordered)};

  if (strategy == GroupStrategy::OrbitalGraphs) {
    std::vector<std::size_t> orbit_size_of(static_cast<std::size_t>(degree), 0);
    for (const auto& o : orbits)
      for (int v : o) orbit_size_of[static_cast<std::size_t>(v)] = o.size();
    for (const auto& o : orbits) {
      if (o.size() < 2) continue;  // orbital graphs from a fixed point are futile
      const int alpha = o[0];
      StabChain chain = StabChain::build(degree, stab_gens, {alpha});
      std::vector<Permutation> alpha_stab =
          chain.levels().size() > 1 ? chain.levels()[1].gens : std::vector<Permutation>{};
      for (const auto& q : point_orbits(degree, alpha_stab)) {
        const int beta = q[0];
        if (beta == alpha) continue;
        LabelledDigraph og = orbital_graph(degree, stab_gens, alpha, beta);
        // futile when the arcs are exactly the product of the two orbits
        const std::size_t oa = o.size();
        const std::size_t ob = orbit_size_of[static_cast<std::size_t>(beta)];
        const bool same_orbit = orbit_size_of[static_cast<std::size_t>(beta)] == oa &&
                                std::binary_search(o.begin(), o.end(), beta);
        const std::size_t full = oa * ob - (same_orbit ? oa : 0);
        if (og.arc_count() != full) entries.push_back(std::move(og));
      }
    }
  }
  return DigraphStack(degree, std::move(entries));
}

class GroupRefiner : public Refiner {
public:
  GroupRefiner(std::string name, PermGroup g, GroupStrategy strategy, bool is_group)
      : Refiner(std::move(name), is_group), group_(std::move(g)), strategy_(strategy) {}

  void begin_search() override { table_.clear(); }

  DigraphStack apply_left(const DigraphStack& s, const FixedFn& fixed,
                          std::size_t depth) override {
    return apply(s, fixed, depth, true);
  }
  DigraphStack apply_right(const DigraphStack& t, const FixedFn& fixed,
                           std::size_t depth) override {
    return apply(t, fixed, depth, false);
  }
  bool member(const Permutation& p) const override { return group_.contains(p); }

  std::size_t table_entries() const { return table_.size(); }

protected:
  DigraphStack apply(const DigraphStack& s, const FixedFn& fixed, std::size_t depth,
                     bool allow_create) {
    const std::pair<std::size_t, std::size_t> key{depth, s.size()};
    auto it = table_.find(key);
    if (it == table_.end()) {
      if (!allow_create)
        throw std::logic_error("group refiner: right application at untabled stack length");
      Entry e;
      e.fixed = fixed(s);
      e.chain = std::make_shared<StabChain>(
          StabChain::build(group_.degree(), group_.generators(), e.fixed));
      const std::vector<Permutation>& stab_gens =
          e.chain->levels().size() > e.fixed.size() ? e.chain->levels()[e.fixed.size()].gens
                                                    : e.no_gens;
      e.value = std::make_shared<DigraphStack>(
          encode_stabiliser(group_.degree(), stab_gens, strategy_));
      it = table_.emplace(key, std::move(e)).first;
      return *it->second.value;
    }
    const Entry& e = it->second;
    std::vector<int> fx = fixed(s);
    if (fx == e.fixed) return *e.value;
    if (fx.size() != e.fixed.size()) return DigraphStack(group_.degree());  // a = Fail
    std::optional<Permutation> a = e.chain->prefix_representative(e.fixed, fx);
    if (!a) return DigraphStack(group_.degree());
    return e.value->apply_perm(*a);
  }

  const PermGroup& group() const { return group_; }

private:
  struct Entry {
    std::vector<int> fixed;
    std::shared_ptr<StabChain> chain;  // base prescribed to `fixed`
    std::shared_ptr<DigraphStack> value;
    std::vector<Permutation> no_gens;
  };
  PermGroup group_;
  GroupStrategy strategy_;
  std::map<std::pair<std::size_t, std::size_t>, Entry> table_;  // (depth, stack length)
};

class CosetRefiner : public GroupRefiner {
public:
  CosetRefiner(PermGroup g, Permutation rep, GroupStrategy strategy)
      : GroupRefiner("coset", std::move(g), strategy, rep.is_identity()),
        rep_(std::move(rep)),
        rep_inv_(rep_.inverse()) {}

  DigraphStack apply_right(const DigraphStack& t, const FixedFn& fixed,
                           std::size_t depth) override {
    // g(S) = f(S^(h^-1))^h
    DigraphStack shifted = t.apply_perm(rep_inv_);
    return GroupRefiner::apply(shifted, fixed, depth, false).apply_perm(rep_);
  }
  bool member(const Permutation& p) const override {
    return group().contains(compose(p, rep_inv_));
  }

private:
  Permutation rep_;
  Permutation rep_inv_;
};

class ShiftedRefiner : public Refiner {
public:
  ShiftedRefiner(RefinerPtr inner, Permutation shift)
      : Refiner(inner->name() + "_shifted", true),
        inner_(std::move(inner)),
        shift_(std::move(shift)) {}

  void begin_search() override { inner_->begin_search(); }
  DigraphStack apply_left(const DigraphStack& s, const FixedFn& fixed,
                          std::size_t depth) override {
    return inner_->apply_left(s, fixed, depth);
  }
  DigraphStack apply_right(const DigraphStack& t, const FixedFn& fixed,
                           std::size_t depth) override {
    return inner_->apply_left(t, fixed, depth);
  }
  bool member(const Permutation& p) const override {
    return inner_->member(compose(p, shift_));
  }

private:
  RefinerPtr inner_;
  Permutation shift_;
};

}  // namespace

RefinerPtr group_refiner(PermGroup g, GroupStrategy strategy) {
  return std::make_shared<GroupRefiner>("group", std::move(g), strategy, true);
}

RefinerPtr coset_refiner(PermGroup g, Permutation rep, GroupStrategy strategy) {
  if (g.degree() != rep.degree()) throw std::invalid_argument("coset_refiner: degree mismatch");
  return std::make_shared<CosetRefiner>(std::move(g), std::move(rep), strategy);
}

RefinerPtr shifted_refiner(RefinerPtr inner, const Permutation& shift) {
  return std::make_shared<ShiftedRefiner>(std::move(inner), shift);
}

}  // namespace dgs
