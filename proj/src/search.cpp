#include "dgs/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgs {

bool verify_bsgs(int degree, const BSGSResult& result, const BigNat& expected_order) {
  std::vector<Permutation> gens;
  for (const Permutation& g : result.strong_generators)
    if (!g.is_identity()) gens.push_back(g);
  BigNat order(1);
  for (int b : result.base) {
    order.mul(point_orbit(degree, gens, b).size());
    std::vector<Permutation> next;
    for (const Permutation& g : gens)
      if (g[b] == b) next.push_back(g);
    gens = std::move(next);
  }
  for (const Permutation& g : gens)
    if (!g.is_identity()) return false;  // base does not reach the trivial group
  return order == expected_order;
}

SearchEngine::SearchEngine(int degree, std::vector<RefinerPtr> refiners, SearchOptions opts)
    : degree_(degree), refiners_(std::move(refiners)), opts_(opts) {
  fixed_fn_ = [this](const DigraphStack& s) { return fixed_points(s); };
}

void SearchEngine::reset() {
  stats_ = SearchStats{};
  trace_.clear();
  base_.clear();
  for (const RefinerPtr& r : refiners_) r->begin_search();
}

const Classification& SearchEngine::memo_classification(const LabelledDigraph& g) {
  auto it = cls_memo_.find(g);
  if (it == cls_memo_.end()) it = cls_memo_.emplace(g, equitable_labelling(g)).first;
  return it->second;
}

const LabelledDigraph& SearchEngine::memo_squash(const DigraphStack& s) {
  auto it = squash_memo_.find(s);
  if (it == squash_memo_.end()) it = squash_memo_.emplace(s, squash(s)).first;
  return it->second;
}

const SearchEngine::ExactEntry& SearchEngine::memo_canon(const LabelledDigraph& g) {
  auto it = canon_memo_.find(g);
  if (it == canon_memo_.end()) {
    CanonResult c = canonise(g);
    LabelledDigraph form = g.apply_perm(c.canonical_perm);
    it = canon_memo_.emplace(g, ExactEntry{std::move(c), std::move(form)}).first;
  }
  return it->second;
}

WeakSide SearchEngine::weak_side_of(const DigraphStack& s) {
  std::vector<Classification> cls;
  cls.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) cls.push_back(memo_classification(s[i]));
  return weak_side_from_entries(s.degree(), std::move(cls));
}

std::vector<int> SearchEngine::fixed_points(const DigraphStack& s) {
  switch (opts_.approx) {
    case ApproxKind::Weak: {
      WeakSide side = weak_side_of(s);
      std::vector<int> fx;
      for (const auto& cell : side.cells)
        if (cell.size() == 1) fx.push_back(cell[0]);
      return fx;
    }
    case ApproxKind::Strong:
      return memo_classification(memo_squash(s)).singleton_points();
    case ApproxKind::Exact:
      return exact_fixed_from(memo_canon(memo_squash(s)).canon);
  }
  return {};
}

IsoEstimate SearchEngine::approx_pair(const DigraphStack& s, const DigraphStack& t) {
  ++stats_.approx_calls;
  switch (opts_.approx) {
    case ApproxKind::Weak:
      return weak_estimate(s, t, weak_side_of(s), weak_side_of(t));
    case ApproxKind::Strong:
      return strong_estimate(s, t, memo_classification(memo_squash(s)),
                             memo_classification(memo_squash(t)));
    case ApproxKind::Exact: {
      const ExactEntry& es = memo_canon(memo_squash(s));
      const ExactEntry& et = memo_canon(memo_squash(t));
      return exact_estimate(s, t, es.canon, es.form, et.canon, et.form);
    }
  }
  return IsoEstimate::empty_estimate(degree_);
}

IsoEstimate SearchEngine::approx_sym(const DigraphStack& s) {
  ++stats_.approx_calls;
  switch (opts_.approx) {
    case ApproxKind::Weak: {
      WeakSide side = weak_side_of(s);
      return weak_estimate(s, s, side, side);
    }
    case ApproxKind::Strong: {
      const Classification& cls = memo_classification(memo_squash(s));
      return strong_estimate(s, s, cls, cls);
    }
    case ApproxKind::Exact: {
      const ExactEntry& e = memo_canon(memo_squash(s));
      return exact_estimate(s, s, e.canon, e.form, e.canon, e.form);
    }
  }
  return IsoEstimate::empty_estimate(degree_);
}

IsoEstimate SearchEngine::approximate(const DigraphStack& s, const DigraphStack& t) {
  return approx_pair(s, t);
}

std::pair<DigraphStack, DigraphStack> SearchEngine::refine_pair(const DigraphStack& s,
                                                                const DigraphStack& t) {
  reset();
  RefineOutcome r = refine(s, t, 0, false);
  return {std::move(r.s), std::move(r.t)};
}

SearchEngine::RefineOutcome SearchEngine::refine(DigraphStack s, DigraphStack t,
                                                 std::size_t depth, bool symmetric) {
  if (trace_.size() <= depth) trace_.resize(depth + 1);
  IsoEstimate est = symmetric ? approx_sym(s) : approx_pair(s, t);
  if (est.is_empty()) return {std::move(s), std::move(t), std::move(est)};

  std::size_t pass = 0;
  while (true) {
    DepthTrace& tr = trace_[depth];
    if (pass < tr.pass_ends.size()) {
      // replay a recorded pass: the left appends are known, only the right
      // side needs computing
      DigraphStack s_saved = s;
      DigraphStack t_saved = t;
      const std::size_t begin = pass == 0 ? 0 : tr.pass_ends[pass - 1];
      const std::size_t end = tr.pass_ends[pass];
      for (std::size_t k = begin; k < end && s.size() == t.size(); ++k) {
        const TraceStep& step = tr.steps[k];
        if (opts_.check_invariants) {
          DigraphStack fresh = refiners_[step.refiner]->apply_left(s, fixed_fn_, depth);
          if (!(fresh == step.left_out))
            throw std::logic_error("left trace replay mismatch at depth " +
                                   std::to_string(depth));
        }
        DigraphStack right_out =
            symmetric ? step.left_out
                      : refiners_[step.refiner]->apply_right(t, fixed_fn_, depth);
        if (!symmetric) ++stats_.refiner_calls;
        s = s.append(step.left_out);
        t = t.append(right_out);
      }
      IsoEstimate next = symmetric ? approx_sym(s) : approx_pair(s, t);
      if (next.is_empty()) return {std::move(s), std::move(t), std::move(next)};
      if (!(next.size() < est.size()))
        return {std::move(s_saved), std::move(t_saved), std::move(est)};
      est = std::move(next);
      ++pass;
      continue;
    }
    if (tr.complete) return {std::move(s), std::move(t), std::move(est)};

    // compute a fresh pass, recording the left appends if it advances
    DigraphStack s_saved = s;
    DigraphStack t_saved = t;
    std::vector<TraceStep> recorded;
    for (std::size_t i = 0; i < refiners_.size() && s.size() == t.size(); ++i) {
      DigraphStack left_out = refiners_[i]->apply_left(s, fixed_fn_, depth);
      ++stats_.refiner_calls;
      DigraphStack right_out = left_out;
      if (!symmetric) {
        right_out = refiners_[i]->apply_right(t, fixed_fn_, depth);
        ++stats_.refiner_calls;
      }
      recorded.push_back(TraceStep{i, left_out});
      s = s.append(left_out);
      t = t.append(right_out);
    }
    IsoEstimate next = symmetric ? approx_sym(s) : approx_pair(s, t);
    if (next.is_empty()) return {std::move(s), std::move(t), std::move(next)};
    if (!(next.size() < est.size())) {
      trace_[depth].complete = true;
      return {std::move(s_saved), std::move(t_saved), std::move(est)};
    }
    DepthTrace& tr2 = trace_[depth];
    for (TraceStep& step : recorded) tr2.steps.push_back(std::move(step));
    tr2.pass_ends.push_back(tr2.steps.size());
    est = std::move(next);
    ++pass;
  }
}

SplitResult SearchEngine::node_split(const DigraphStack& s, const DigraphStack& t,
                                     const IsoEstimate& est, std::size_t depth) {
  DepthTrace& tr = trace_[depth];
  if (!tr.has_split) {
    tr.alpha = split_point(est);
    tr.orbit = point_orbit(degree_, est.group().generators(), tr.alpha);
    tr.has_split = true;
  } else if (opts_.check_invariants) {
    if (tr.alpha != split_point(est))
      throw std::logic_error("split point diverged between branches at equal depth");
  }

  SplitResult out;
  out.alpha = tr.alpha;
  std::vector<int> betas;
  betas.reserve(tr.orbit.size());
  for (int x : tr.orbit) betas.push_back(est.representative()[x]);
  std::sort(betas.begin(), betas.end());
  if (s == t) {
    auto it = std::find(betas.begin(), betas.end(), out.alpha);
    if (it != betas.end()) betas.erase(it);
    betas.insert(betas.begin(), out.alpha);
  }
  out.betas = std::move(betas);
  out.left_extension = DigraphStack(degree_, {point_digraph(degree_, out.alpha)});
  return out;
}

bool SearchEngine::search_rec(const DigraphStack& s, const DigraphStack& t, std::size_t depth,
                              const BigNat* parent_size, bool single,
                              std::vector<Permutation>& out) {
  RefineOutcome r = refine(s, t, depth, false);
  if (r.est.is_empty()) return false;
  if (parent_size != nullptr && !(r.est.size() < *parent_size))
    throw std::logic_error("search: child estimate did not shrink; aborting to avoid divergence");

  if (r.est.is_singleton()) {
    ++stats_.leaves;
    const Permutation& h = r.est.sole_element();
    bool ok = r.s.apply_perm(h) == r.t;
    for (std::size_t i = 0; ok && i < refiners_.size(); ++i) ok = refiners_[i]->member(h);
    if (ok) {
      out.push_back(h);
      return single;
    }
    return false;
  }

  SplitResult sp = node_split(r.s, r.t, r.est, depth);
  BigNat my_size = r.est.size();
  DigraphStack child_left = r.s.append(sp.left_extension);
  for (int beta : sp.betas) {
    ++stats_.nodes;
    DigraphStack child_right = r.t.append(point_digraph(degree_, beta));
    if (search_rec(child_left, child_right, depth + 1, &my_size, single, out)) return true;
  }
  return false;
}

std::vector<Permutation> SearchEngine::find_all() {
  reset();
  std::vector<Permutation> out;
  search_rec(DigraphStack(degree_), DigraphStack(degree_), 0, nullptr, false, out);
  return out;
}

std::optional<Permutation> SearchEngine::find_one() {
  reset();
  std::vector<Permutation> out;
  search_rec(DigraphStack(degree_), DigraphStack(degree_), 0, nullptr, true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

namespace {

bool in_orbit_of(int beta, const std::vector<int>& seeds, int degree,
                 const std::vector<Permutation>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> queue;
  for (int s : seeds)
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      queue.push_back(s);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (seen[static_cast<std::size_t>(beta)]) return true;
    for (const Permutation& g : gens) {
      int img = g[queue[head]];
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        queue.push_back(img);
      }
    }
  }
  return seen[static_cast<std::size_t>(beta)];
}

}  // namespace

std::vector<Permutation> SearchEngine::gens_rec(const DigraphStack& s, std::size_t depth) {
  RefineOutcome r = refine(s, s, depth, true);
  if (r.est.is_empty())
    throw std::logic_error("generator search: estimate emptied although the identity solves it");
  if (r.est.is_singleton()) return {Permutation(degree_)};

  SplitResult sp = node_split(r.s, r.s, r.est, depth);
  base_.push_back(sp.alpha);
  BigNat my_size = r.est.size();
  DigraphStack child_left = r.s.append(sp.left_extension);

  // the leftmost descent builds the base; it is not a search node
  std::vector<Permutation> x = gens_rec(child_left, depth + 1);

  std::vector<int> tried{sp.alpha};
  for (std::size_t bi = 0; bi < sp.betas.size(); ++bi) {
    int beta = sp.betas[bi];
    if (beta == sp.alpha) continue;
    if (opts_.prune_gens_orbit && in_orbit_of(beta, tried, degree_, x)) {
      tried.push_back(beta);
      continue;
    }
    std::vector<Permutation> found;
    DigraphStack child_right = r.s.append(point_digraph(degree_, beta));
    search_rec(child_left, child_right, depth + 1, &my_size, true, found);
    if (!found.empty()) x.push_back(std::move(found.front()));
    tried.push_back(beta);
  }
  return x;
}

BSGSResult SearchEngine::find_generators() {
  reset();
  Permutation id(degree_);
  for (const RefinerPtr& ref : refiners_)
    if (!ref->member(id))
      throw std::invalid_argument("find_generators: constraint '" + ref->name() +
                                  "' does not contain the identity");
  base_.clear();
  std::vector<Permutation> gens = gens_rec(DigraphStack(degree_), 0);
  std::vector<Permutation> cleaned;
  for (Permutation& g : gens)
    if (!g.is_identity()) cleaned.push_back(std::move(g));
  if (cleaned.empty()) cleaned.push_back(id);
  return BSGSResult{base_, std::move(cleaned)};
}

SearchEngine::CosetSolution SearchEngine::find_coset() {
  CosetSolution sol;
  std::optional<Permutation> rep = find_one();
  SearchStats first_phase = stats_;
  if (!rep) {
    sol.empty = true;
    return sol;
  }
  sol.empty = false;
  sol.representative = rep;

  std::vector<RefinerPtr> shifted;
  shifted.reserve(refiners_.size());
  for (const RefinerPtr& r : refiners_) shifted.push_back(shifted_refiner(r, *rep));
  SearchEngine gens_engine(degree_, std::move(shifted), opts_);
  sol.group = gens_engine.find_generators();

  stats_ = first_phase;
  stats_.nodes += gens_engine.stats().nodes;
  stats_.leaves += gens_engine.stats().leaves;
  stats_.refiner_calls += gens_engine.stats().refiner_calls;
  stats_.approx_calls += gens_engine.stats().approx_calls;
  return sol;
}

const DigraphStack& SearchEngine::left_trace_replay(std::size_t depth, std::size_t step) const {
  if (depth >= trace_.size())
    throw std::logic_error("left_trace_replay: depth was never visited");
  const DepthTrace& tr = trace_[depth];
  if (step >= tr.steps.size())
    throw std::logic_error("left_trace_replay: step not recorded at this depth");
  return tr.steps[step].left_out;
}

}  // namespace dgs
