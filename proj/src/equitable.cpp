#include "dgs/equitable.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace dgs {

namespace {

struct Adjacency {
  // per vertex: (neighbour, arc label)
  std::vector<std::vector<std::pair<int, Label>>> out, in;
};

Adjacency adjacency(const LabelledDigraph& g) {
  Adjacency adj;
  adj.out.resize(static_cast<std::size_t>(g.degree()));
  adj.in.resize(static_cast<std::size_t>(g.degree()));
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    auto [u, v] = g.arcs()[i];
    adj.out[static_cast<std::size_t>(u)].emplace_back(v, g.arc_labels()[i]);
    adj.in[static_cast<std::size_t>(v)].emplace_back(u, g.arc_labels()[i]);
  }
  return adj;
}

}  // namespace

Classification equitable_labelling(const LabelledDigraph& g) {
  const int n = g.degree();
  const Adjacency adj = adjacency(g);

  using Cell = std::pair<Label, std::vector<int>>;

  // initial cells grouped by vertex label, ordered by label
  std::map<Label, std::vector<int>> initial;
  for (int v = 0; v < n; ++v) initial[g.vertex_label(v)].push_back(v);
  std::vector<Cell> cells(initial.begin(), initial.end());
  std::deque<Cell> to_process(cells.begin(), cells.end());

  std::vector<bool> in_u(static_cast<std::size_t>(n));
  while (!to_process.empty() && cells.size() < static_cast<std::size_t>(n)) {
    Cell processing = std::move(to_process.front());
    to_process.pop_front();
    const Label& x = processing.first;
    const std::vector<int>& u_cell = processing.second;

    std::fill(in_u.begin(), in_u.end(), false);
    for (int v : u_cell) in_u[static_cast<std::size_t>(v)] = true;

    // distinct labels of arcs with an endpoint in U, in label order
    std::set<Label> arc_label_set;
    for (std::size_t i = 0; i < g.arcs().size(); ++i) {
      auto [a, b] = g.arcs()[i];
      if (in_u[static_cast<std::size_t>(a)] || in_u[static_cast<std::size_t>(b)])
        arc_label_set.insert(g.arc_labels()[i]);
    }
    const std::vector<Label> arc_labels(arc_label_set.begin(), arc_label_set.end());
    std::map<Label, std::size_t> arc_label_index;
    for (std::size_t i = 0; i < arc_labels.size(); ++i) arc_label_index.emplace(arc_labels[i], i);
    const Label arc_labels_seq = Label::seq(arc_labels);

    using Signature = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    auto signature_of = [&](int v) {
      Signature f(arc_labels.size(), {0, 0});
      for (const auto& [to, lab] : adj.out[static_cast<std::size_t>(v)])
        if (in_u[static_cast<std::size_t>(to)]) ++f[arc_label_index.at(lab)].first;
      for (const auto& [from, lab] : adj.in[static_cast<std::size_t>(v)])
        if (in_u[static_cast<std::size_t>(from)]) ++f[arc_label_index.at(lab)].second;
      return f;
    };

    // split every cell by signature, relabelling in place
    for (std::size_t pos = 0; pos < cells.size();) {
      Cell current = std::move(cells[pos]);
      const Label& y = current.first;

      std::map<Signature, std::vector<int>> parts;
      for (int v : current.second) parts[signature_of(v)].push_back(v);
      const std::size_t k = parts.size();

      std::vector<Cell> replacement;
      replacement.reserve(k);
      for (auto& [sig, members] : parts) {
        std::vector<Label> counts;
        counts.reserve(sig.size());
        for (auto [o, i] : sig) counts.push_back(Label::count(o, i));
        Label fresh = Label::seq({y, x, arc_labels_seq, Label::seq(std::move(counts))});
        replacement.emplace_back(std::move(fresh), std::move(members));
      }

      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(pos));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(pos), replacement.begin(),
                   replacement.end());

      if (k > 1) {
        auto it = std::find(to_process.begin(), to_process.end(), current);
        if (it != to_process.end()) to_process.erase(it);
        for (Cell& c : replacement) to_process.push_back(std::move(c));
      }
      pos += k;
    }
  }

  return Classification{std::move(cells)};
}

IsoEstimate IsoEstimate::empty_estimate(int) {
  IsoEstimate e;
  e.size_ = BigNat();
  return e;
}

IsoEstimate IsoEstimate::coset(PermGroup group, Permutation rep, BigNat size) {
  if (group.degree() != rep.degree())
    throw std::invalid_argument("IsoEstimate: degree mismatch");
  IsoEstimate e;
  e.coset_ = RightCoset{std::move(group), std::move(rep)};
  e.size_ = std::move(size);
  return e;
}

bool IsoEstimate::contains(const Permutation& p) const {
  if (is_empty()) return false;
  return coset_->group.contains(compose(p, coset_->representative.inverse()));
}

PermGroup cell_list_stabiliser(int degree, const std::vector<std::vector<int>>& cells) {
  std::vector<Permutation> gens;
  for (const std::vector<int>& cell : cells) {
    if (cell.size() < 2) continue;
    std::vector<int> tr(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) tr[static_cast<std::size_t>(i)] = i;
    std::swap(tr[static_cast<std::size_t>(cell[0])], tr[static_cast<std::size_t>(cell[1])]);
    gens.push_back(Permutation::from_images(tr));
    if (cell.size() >= 3) {
      std::vector<int> cyc(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) cyc[static_cast<std::size_t>(i)] = i;
      for (std::size_t i = 0; i < cell.size(); ++i)
        cyc[static_cast<std::size_t>(cell[i])] = cell[(i + 1) % cell.size()];
      gens.push_back(Permutation::from_images(cyc));
    }
  }
  return PermGroup(degree, std::move(gens));
}

BigNat cell_list_order(const std::vector<std::vector<int>>& cells) {
  BigNat n(1);
  for (const std::vector<int>& cell : cells)
    for (std::size_t i = 2; i <= cell.size(); ++i) n.mul(i);
  return n;
}

namespace {

// cell index of every vertex, per classification
std::vector<int> cell_index_map(int degree, const Classification& cls) {
  std::vector<int> idx(static_cast<std::size_t>(degree), -1);
  for (std::size_t c = 0; c < cls.cells.size(); ++c)
    for (int v : cls.cells[c].second) idx[static_cast<std::size_t>(v)] = static_cast<int>(c);
  return idx;
}

void intersect_cells(int degree, const std::vector<Classification>& entry_cls, WeakSide& side) {
  std::vector<std::vector<int>> index_maps;
  index_maps.reserve(entry_cls.size());
  for (const Classification& cls : entry_cls) index_maps.push_back(cell_index_map(degree, cls));

  std::map<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < degree; ++v) {
    std::vector<int> sig;
    sig.reserve(index_maps.size());
    for (const auto& m : index_maps) sig.push_back(m[static_cast<std::size_t>(v)]);
    parts[std::move(sig)].push_back(v);
  }
  side.cells.clear();
  side.signatures.clear();
  for (auto& [sig, members] : parts) {
    side.signatures.push_back(sig);
    side.cells.push_back(std::move(members));
  }
}

// order-preserving map taking the i-th cell of `from` onto the i-th cell
// of `to`, smallest point to smallest point
Permutation cell_transport(int degree, const std::vector<std::vector<int>>& from,
                           const std::vector<std::vector<int>>& to) {
  std::vector<int> images(static_cast<std::size_t>(degree), -1);
  for (std::size_t c = 0; c < from.size(); ++c)
    for (std::size_t i = 0; i < from[c].size(); ++i)
      images[static_cast<std::size_t>(from[c][i])] = to[c][i];
  return Permutation::from_images(std::move(images));
}

}  // namespace

WeakSide weak_side(const DigraphStack& s) {
  WeakSide side;
  side.entry_cls.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) side.entry_cls.push_back(equitable_labelling(s[i]));
  intersect_cells(s.degree(), side.entry_cls, side);
  return side;
}

WeakSide weak_side_from_entries(int degree, std::vector<Classification> entry_cls) {
  WeakSide side;
  side.entry_cls = std::move(entry_cls);
  intersect_cells(degree, side.entry_cls, side);
  return side;
}

IsoEstimate weak_estimate(const DigraphStack& s, const DigraphStack& t, const WeakSide& ws,
                          const WeakSide& wt) {
  const int degree = s.degree();
  if (s.size() != t.size()) return IsoEstimate::empty_estimate(degree);
  for (std::size_t i = 0; i < ws.entry_cls.size(); ++i) {
    const auto& cs = ws.entry_cls[i].cells;
    const auto& ct = wt.entry_cls[i].cells;
    if (cs.size() != ct.size()) return IsoEstimate::empty_estimate(degree);
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (cs[j].first != ct[j].first) return IsoEstimate::empty_estimate(degree);
  }
  if (ws.cells.size() != wt.cells.size()) return IsoEstimate::empty_estimate(degree);
  for (std::size_t i = 0; i < ws.cells.size(); ++i) {
    if (ws.cells[i].size() != wt.cells[i].size() || ws.signatures[i] != wt.signatures[i])
      return IsoEstimate::empty_estimate(degree);
  }
  return IsoEstimate::coset(cell_list_stabiliser(degree, ws.cells),
                            cell_transport(degree, ws.cells, wt.cells),
                            cell_list_order(ws.cells));
}

IsoEstimate strong_estimate(const DigraphStack& s, const DigraphStack& t,
                            const Classification& cs, const Classification& ct) {
  const int degree = s.degree();
  if (s.size() != t.size()) return IsoEstimate::empty_estimate(degree);
  if (cs.cells.size() != ct.cells.size()) return IsoEstimate::empty_estimate(degree);
  for (std::size_t i = 0; i < cs.cells.size(); ++i) {
    if (cs.cells[i].first != ct.cells[i].first ||
        cs.cells[i].second.size() != ct.cells[i].second.size())
      return IsoEstimate::empty_estimate(degree);
  }
  std::vector<std::vector<int>> from, to;
  from.reserve(cs.cells.size());
  to.reserve(ct.cells.size());
  for (const auto& c : cs.cells) from.push_back(c.second);
  for (const auto& c : ct.cells) to.push_back(c.second);
  return IsoEstimate::coset(cell_list_stabiliser(degree, from), cell_transport(degree, from, to),
                            cell_list_order(from));
}

IsoEstimate weak_approx(const DigraphStack& s, const DigraphStack& t) {
  return weak_estimate(s, t, weak_side(s), weak_side(t));
}

IsoEstimate strong_approx(const DigraphStack& s, const DigraphStack& t) {
  return strong_estimate(s, t, equitable_labelling(squash(s)), equitable_labelling(squash(t)));
}

std::vector<int> weak_fixed(const DigraphStack& s) {
  WeakSide side = weak_side(s);
  std::vector<int> out;
  for (const auto& cell : side.cells)
    if (cell.size() == 1) out.push_back(cell[0]);
  return out;
}

std::vector<int> strong_fixed(const DigraphStack& s) {
  return equitable_labelling(squash(s)).singleton_points();
}

}  // namespace dgs
