#include "dgs/canon.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dgs {

namespace {

struct Leaf {
  LabelledDigraph form;
  Permutation perm;
};

class CanonSearcher {
public:
  explicit CanonSearcher(const LabelledDigraph& g) : gamma_(g), n_(g.degree()) {}

  CanonResult run() {
    recurse(gamma_.vertex_labels(), {});
    if (auts_.empty()) auts_.push_back(Permutation(n_));
    return CanonResult{best_->perm, PermGroup(n_, auts_)};
  }

private:
  void recurse(const std::vector<Label>& vlabels, std::vector<int> path) {
    Classification cls = equitable_labelling(gamma_.with_vertex_labels(vlabels));
    if (cls.discrete()) {
      handle_leaf(cls);
      return;
    }

    // first smallest non-singleton cell, in classification order
    std::size_t target = cls.cells.size();
    std::size_t best_size = static_cast<std::size_t>(n_) + 1;
    for (std::size_t i = 0; i < cls.cells.size(); ++i) {
      std::size_t sz = cls.cells[i].second.size();
      if (sz >= 2 && sz < best_size) {
        best_size = sz;
        target = i;
      }
    }

    std::vector<Label> refined(static_cast<std::size_t>(n_));
    for (const auto& [label, cell] : cls.cells)
      for (int v : cell) refined[static_cast<std::size_t>(v)] = label;

    std::vector<int> tried;
    for (int v : cls.cells[target].second) {
      if (pruned(v, tried, path)) continue;
      tried.push_back(v);
      std::vector<Label> child = refined;
      // a fresh label no other vertex can carry: # never labels a vertex
      child[static_cast<std::size_t>(v)] =
          Label::seq({child[static_cast<std::size_t>(v)], Label::hash_mark()});
      std::vector<int> child_path = path;
      child_path.push_back(v);
      recurse(child, std::move(child_path));
    }
  }

  void handle_leaf(const Classification& cls) {
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cls.cells.size(); ++i)
      images[static_cast<std::size_t>(cls.cells[i].second[0])] = static_cast<int>(i);
    Permutation p = Permutation::from_images(std::move(images));
    LabelledDigraph form = gamma_.apply_perm(p);

    if (!first_) {
      first_ = Leaf{form, p};
      best_ = first_;
      return;
    }
    if (form == first_->form) record_automorphism(compose(p, first_->perm.inverse()));
    if (digraph_less(form, best_->form)) {
      best_ = Leaf{std::move(form), std::move(p)};
    } else if (form == best_->form && !(best_->perm == p)) {
      record_automorphism(compose(p, best_->perm.inverse()));
    }
  }

  void record_automorphism(Permutation a) {
    if (a.is_identity()) return;
    if (!auts_.empty() && PermGroup(n_, auts_).contains(a)) return;
    auts_.push_back(std::move(a));
    auts_dirty_ = true;
  }

  // v is skipped when some earlier-tried sibling lies in its orbit under
  // the pointwise stabiliser of the individualisation path.
  bool pruned(int v, const std::vector<int>& tried, const std::vector<int>& path) {
    if (tried.empty() || auts_.empty()) return false;
    refresh_orbits(path);
    for (int w : tried)
      if (orbit_id_[static_cast<std::size_t>(w)] == orbit_id_[static_cast<std::size_t>(v)])
        return true;
    return false;
  }

  void refresh_orbits(const std::vector<int>& path) {
    if (!auts_dirty_ && orbit_path_ == path) return;
    StabChain chain = StabChain::build(n_, auts_, path);
    const std::vector<Permutation>& stab_gens =
        path.size() < chain.levels().size() ? chain.levels()[path.size()].gens
                                            : std::vector<Permutation>{};
    orbit_id_.assign(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (const std::vector<int>& orb : point_orbits(n_, stab_gens)) {
      for (int v : orb) orbit_id_[static_cast<std::size_t>(v)] = next;
      ++next;
    }
    orbit_path_ = path;
    auts_dirty_ = false;
  }

  const LabelledDigraph& gamma_;
  int n_;
  std::vector<Permutation> auts_;
  bool auts_dirty_ = false;
  std::vector<int> orbit_id_;
  std::vector<int> orbit_path_{-1};  // impossible initial value
  std::optional<Leaf> first_, best_;
};

}  // namespace

CanonResult canonise(const LabelledDigraph& g) { return CanonSearcher(g).run(); }

IsoEstimate exact_estimate(const DigraphStack& s, const DigraphStack& t, const CanonResult& cs,
                           const LabelledDigraph& s_form, const CanonResult& ct,
                           const LabelledDigraph& t_form) {
  if (s.size() != t.size() || !(s_form == t_form))
    return IsoEstimate::empty_estimate(s.degree());
  return IsoEstimate::coset(cs.automorphisms,
                            compose(cs.canonical_perm, ct.canonical_perm.inverse()),
                            cs.automorphisms.order());
}

IsoEstimate exact_approx(const DigraphStack& s, const DigraphStack& t) {
  LabelledDigraph qs = squash(s);
  LabelledDigraph qt = squash(t);
  CanonResult cs = canonise(qs);
  CanonResult ct = canonise(qt);
  return exact_estimate(s, t, cs, qs.apply_perm(cs.canonical_perm), ct,
                        qt.apply_perm(ct.canonical_perm));
}

std::vector<int> exact_fixed_from(const CanonResult& c) {
  const int n = c.canonical_perm.degree();
  // fixed points of Aut^g, ascending, pulled back through g
  std::vector<Permutation> conj;
  conj.reserve(c.automorphisms.generators().size());
  for (const Permutation& a : c.automorphisms.generators())
    conj.push_back(conjugate(a, c.canonical_perm));
  Permutation g_inv = c.canonical_perm.inverse();
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    bool fixed = true;
    for (const Permutation& a : conj)
      if (a[v] != v) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(g_inv[v]);
  }
  return out;
}

std::vector<int> exact_fixed(const DigraphStack& s) {
  return exact_fixed_from(canonise(squash(s)));
}

}  // namespace dgs
