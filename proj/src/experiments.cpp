#include "dgs/experiments.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgs {

std::string csv_header() { return "seed,mode,nodes,zero,order,empty,ms"; }

std::string to_csv(const ExperimentRow& row) {
  std::ostringstream out;
  out << row.seed << ',' << to_string(row.mode) << ',' << row.nodes << ',' << (row.zero ? 1 : 0)
      << ',' << row.order << ',' << (row.empty ? 1 : 0) << ',' << row.ms;
  return out.str();
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const ExperimentRow& r : rows) out += to_csv(r) + "\n";
  return out;
}

PermGroup make_grid_group(int n) {
  if (n < 2) throw std::invalid_argument("make_grid_group: n must be at least 2");
  const int degree = n * n;
  auto point = [n](int r, int c) { return r * n + c; };

  auto row_action = [&](const Permutation& sigma) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) images[static_cast<std::size_t>(point(r, c))] = point(sigma[r], c);
    return Permutation::from_images(std::move(images));
  };
  auto col_action = [&](const Permutation& sigma) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) images[static_cast<std::size_t>(point(r, c))] = point(r, sigma[c]);
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  const PermGroup sym = PermGroup::symmetric(n);
  for (const Permutation& sigma : sym.generators()) {
    gens.push_back(row_action(sigma));
    gens.push_back(col_action(sigma));
  }
  return PermGroup(degree, std::move(gens));
}

ProblemSpec grid_problem(int n, int kind, Mode mode, std::uint64_t instance_seed) {
  const int degree = n * n;
  Rng rng(instance_seed);

  Constraint stab;
  if (kind == 1) {
    std::vector<int> pts(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) pts[static_cast<std::size_t>(i)] = i;
    rng.shuffle(pts);
    pts.resize(static_cast<std::size_t>(degree / 2));
    std::sort(pts.begin(), pts.end());
    stab.kind = Constraint::Kind::SetStab;
    stab.from_sets = {std::move(pts)};
  } else if (kind == 2) {
    std::vector<int> pts;
    for (int r = 0; r < n; ++r) {
      std::vector<int> row(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = r * n + c;
      rng.shuffle(row);
      for (int i = 0; i < n / 2; ++i) pts.push_back(row[static_cast<std::size_t>(i)]);
    }
    std::sort(pts.begin(), pts.end());
    stab.kind = Constraint::Kind::SetStab;
    stab.from_sets = {std::move(pts)};
  } else if (kind == 3) {
    if (n % 2 != 0) throw std::invalid_argument("grid_problem: kind 3 needs even n");
    std::vector<int> pts(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) pts[static_cast<std::size_t>(i)] = i;
    rng.shuffle(pts);
    std::vector<int> cell1(pts.begin(), pts.begin() + degree / 2);
    std::vector<int> cell2(pts.begin() + degree / 2, pts.end());
    std::sort(cell1.begin(), cell1.end());
    std::sort(cell2.begin(), cell2.end());
    stab.kind = Constraint::Kind::DisjointStab;
    stab.from_sets = {std::move(cell1), std::move(cell2)};
  } else {
    throw std::invalid_argument("grid_problem: kind must be 1, 2, or 3");
  }

  Constraint in_grid;
  in_grid.kind = Constraint::Kind::InGroup;
  in_grid.generators = make_grid_group(n).generators();

  ProblemSpec spec;
  spec.degree = degree;
  spec.goal = Goal::Group;
  spec.mode = mode;
  spec.seed = instance_seed;
  spec.constraints.push_back(std::move(in_grid));
  spec.constraints.push_back(std::move(stab));
  return spec;
}

std::vector<ExperimentRow> grid_experiments(int n, int count, int kind, Mode mode,
                                            std::uint64_t seed) {
  std::vector<ExperimentRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (int idx = 0; idx < count; ++idx) {
    Rng derive(seed, static_cast<std::uint64_t>(idx));
    std::uint64_t instance_seed = derive.next();
    ProblemSpec spec = grid_problem(n, kind, mode, instance_seed);
    RunReport report = run(spec);
    ExperimentRow row;
    row.seed = instance_seed;
    row.mode = mode;
    row.nodes = report.stats.nodes;
    row.zero = report.stats.nodes == 0;
    row.order = report.group_order ? report.group_order->str() : "0";
    row.empty = !report.group.has_value();
    row.ms = report.millis;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Permutation cycle_perm(int degree, const std::vector<int>& cycle) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
  return Permutation::from_images(std::move(images));
}

Permutation transposition(int degree, int a, int b) { return cycle_perm(degree, {a, b}); }

}  // namespace

std::vector<std::vector<Permutation>> transitive_catalogue(int n) {
  if (n < 2) throw std::invalid_argument("transitive_catalogue: degree must be at least 2");
  std::vector<std::vector<Permutation>> out;

  std::vector<int> full(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
  Permutation rotation = cycle_perm(n, full);

  // cyclic
  out.push_back({rotation});
  if (n >= 3) {
    // dihedral: rotation plus the reflection fixing 0
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
    out.push_back({rotation, Permutation::from_images(std::move(refl))});
    // alternating
    if (n == 3) {
      out.push_back({cycle_perm(n, {0, 1, 2})});
    } else {
      std::vector<Permutation> alt{cycle_perm(n, {0, 1, 2})};
      if (n % 2 == 1) {
        alt.push_back(rotation);
      } else {
        std::vector<int> shifted;
        for (int i = 1; i < n; ++i) shifted.push_back(i);
        alt.push_back(cycle_perm(n, shifted));  // (2,...,n), even
      }
      out.push_back(std::move(alt));
    }
    // symmetric
    out.push_back({transposition(n, 0, 1), rotation});
  }
  if (n == 4) out.push_back({compose(transposition(n, 0, 1), transposition(n, 2, 3)),
                             compose(transposition(n, 0, 2), transposition(n, 1, 3))});  // Klein
  if (n == 5) out.push_back({rotation, cycle_perm(n, {1, 2, 4, 3})});  // F20, x -> 2x+c

  return out;
}

PermGroup make_subdirect(int k, int n, Rng& rng) {
  if (k < 2 || n < 2) throw std::invalid_argument("make_subdirect: need k, n >= 2");
  const int degree = k * n;
  const auto catalogue = transitive_catalogue(n);

  for (int attempt = 0; attempt < 64; ++attempt) {
    // pick factors and conjugate each inside its block
    std::vector<std::vector<Permutation>> factor_gens(static_cast<std::size_t>(k));
    std::vector<StabChain> factor_chains;
    std::vector<BigNat> factor_orders;
    BigNat product_order(1);
    for (int i = 0; i < k; ++i) {
      const auto& raw = catalogue[rng.below(catalogue.size())];
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = x;
      rng.shuffle(images);
      Permutation conj = Permutation::from_images(std::move(images));
      std::vector<Permutation> gens;
      gens.reserve(raw.size());
      for (const Permutation& g : raw) gens.push_back(conjugate(g, conj));
      factor_chains.push_back(StabChain::build(n, gens));
      factor_orders.push_back(factor_chains.back().order());
      BigNat next = product_order;
      product_order = BigNat(1);
      // product_order *= |factor|
      {
        BigNat acc = next;
        const BigNat& f = factor_orders.back();
        // small orders only; multiply via u64
        acc.mul(f.as_u64());
        product_order = acc;
      }
      factor_gens[static_cast<std::size_t>(i)] = std::move(gens);
    }

    auto embed = [&](int block, const Permutation& p) {
      std::vector<int> images(static_cast<std::size_t>(degree));
      for (int x = 0; x < degree; ++x) images[static_cast<std::size_t>(x)] = x;
      for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(block * n + x)] = block * n + p[x];
      return Permutation::from_images(std::move(images));
    };

    auto random_product_element = [&]() {
      Permutation g(degree);
      for (int i = 0; i < k; ++i) {
        Permutation f = factor_chains[static_cast<std::size_t>(i)].sample(
            [&](std::size_t, std::size_t orbit_size) { return rng.below(orbit_size); });
        g = compose(g, embed(i, f));
      }
      return g;
    };

    std::vector<Permutation> sample;
    for (int draws = 0; draws < 48; ++draws) {
      sample.push_back(random_product_element());
      // surjective onto every factor?
      bool surjective = true;
      for (int i = 0; i < k && surjective; ++i) {
        std::vector<Permutation> proj;
        for (const Permutation& g : sample) {
          std::vector<int> images(static_cast<std::size_t>(n));
          for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = g[i * n + x] - i * n;
          proj.push_back(Permutation::from_images(std::move(images)));
        }
        surjective = StabChain::build(n, proj).order() == factor_orders[static_cast<std::size_t>(i)];
      }
      if (!surjective) continue;
      BigNat sub_order = StabChain::build(degree, sample).order();
      if (sub_order < product_order) return PermGroup(degree, sample);
      break;  // whole product generated: abandon and start again
    }
  }
  throw std::runtime_error("make_subdirect: failed to build a proper subdirect product");
}

std::vector<ExperimentRow> subdirect_experiments(int k, int n, int count, std::uint64_t seed) {
  std::vector<ExperimentRow> rows;
  const int degree = k * n;
  for (int idx = 0; idx < count; ++idx) {
    Rng rng(seed, static_cast<std::uint64_t>(idx));
    std::uint64_t instance_seed = rng.next();

    PermGroup h1 = make_subdirect(k, n, rng);
    PermGroup h2 = make_subdirect(k, n, rng);

    // representatives preserving the block structure: a random permutation
    // within each block, sampled from the orbit-list stabiliser
    auto block_rep = [&]() {
      std::vector<int> images(static_cast<std::size_t>(degree));
      for (int b = 0; b < k; ++b) {
        std::vector<int> blk(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) blk[static_cast<std::size_t>(x)] = b * n + x;
        rng.shuffle(blk);
        for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(b * n + x)] = blk[static_cast<std::size_t>(x)];
      }
      return Permutation::from_images(std::move(images));
    };
    Permutation r1 = block_rep();
    Permutation r2 = block_rep();

    ProblemSpec base;
    base.degree = degree;
    base.goal = Goal::Single;
    base.seed = instance_seed;
    Constraint c1;
    c1.kind = Constraint::Kind::InCoset;
    c1.generators = h1.generators();
    c1.to_perm = r1;
    Constraint c2;
    c2.kind = Constraint::Kind::InCoset;
    c2.generators = h2.generators();
    c2.to_perm = r2;
    base.constraints = {c1, c2};

    std::optional<bool> oracle_empty;
    if (degree <= 8) oracle_empty = oracle(base).empty();

    for (Mode mode : {Mode::Leon, Mode::Orbital, Mode::Strong, Mode::Full}) {
      ProblemSpec spec = base;
      spec.mode = mode;
      RunReport report = run(spec);
      if (oracle_empty.has_value() && *oracle_empty == report.single.has_value())
        throw std::runtime_error("subdirect_experiments: search disagrees with the oracle");
      ExperimentRow row;
      row.seed = instance_seed;
      row.mode = mode;
      row.nodes = report.stats.nodes;
      row.zero = report.stats.nodes == 0;
      row.empty = !report.single.has_value();
      row.ms = report.millis;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace dgs
