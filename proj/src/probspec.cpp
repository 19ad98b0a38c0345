#include "dgs/probspec.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace dgs {

using Json = nlohmann::ordered_json;

std::string to_string(Goal g) {
  switch (g) {
    case Goal::All: return "all";
    case Goal::Single: return "single";
    case Goal::Group: return "group";
  }
  return "?";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Leon: return "leon";
    case Mode::Orbital: return "orbital";
    case Mode::Strong: return "strong";
    case Mode::Full: return "full";
  }
  return "?";
}

Goal goal_from_string(const std::string& s) {
  if (s == "all") return Goal::All;
  if (s == "single") return Goal::Single;
  if (s == "group") return Goal::Group;
  throw std::invalid_argument("unknown goal: " + s);
}

Mode mode_from_string(const std::string& s) {
  if (s == "leon") return Mode::Leon;
  if (s == "orbital") return Mode::Orbital;
  if (s == "strong") return Mode::Strong;
  if (s == "full") return Mode::Full;
  throw std::invalid_argument("unknown mode: " + s);
}

ApproxKind approx_kind(Mode mode) {
  switch (mode) {
    case Mode::Leon:
    case Mode::Orbital: return ApproxKind::Weak;
    case Mode::Strong: return ApproxKind::Strong;
    case Mode::Full: return ApproxKind::Exact;
  }
  return ApproxKind::Strong;
}

namespace {

Label label_from_json(const Json& j) {
  if (j.is_number_integer()) return Label::integer(j.get<std::int64_t>());
  if (j.is_string()) return Label::text(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Label> items;
    for (const Json& e : j) items.push_back(label_from_json(e));
    return Label::seq(std::move(items));
  }
  throw std::invalid_argument("label: expected integer, string, or array");
}

Json label_to_json(const Label& l) {
  switch (l.kind()) {
    case LabelKind::Hash: return Json("#");
    case LabelKind::Int: return Json(l.int_value());
    case LabelKind::Str: return Json(l.text_value());
    case LabelKind::Count: {
      Json arr = Json::array();
      arr.push_back(l.count_value().first);
      arr.push_back(l.count_value().second);
      return arr;
    }
    case LabelKind::Seq: {
      Json arr = Json::array();
      for (const Label& e : l.items()) arr.push_back(label_to_json(e));
      return arr;
    }
  }
  return Json();
}

std::vector<int> points_from_json(const Json& j, int degree, const char* what) {
  std::vector<int> out;
  for (const Json& e : j) {
    int v = e.get<int>();
    if (v < 1 || v > degree)
      throw std::invalid_argument(std::string(what) + ": point out of range (points are 1-based)");
    out.push_back(v - 1);
  }
  return out;
}

std::vector<std::vector<int>> families_from_json(const Json& j, int degree, const char* what) {
  std::vector<std::vector<int>> out;
  for (const Json& e : j) out.push_back(points_from_json(e, degree, what));
  return out;
}

Json points_to_json(const std::vector<int>& pts) {
  Json arr = Json::array();
  for (int p : pts) arr.push_back(p + 1);
  return arr;
}

Json families_to_json(const std::vector<std::vector<int>>& fams) {
  Json arr = Json::array();
  for (const auto& f : fams) arr.push_back(points_to_json(f));
  return arr;
}

LabelledDigraph digraph_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> arcs;
  if (j.contains("arcs")) {
    for (const Json& a : j.at("arcs")) {
      int u = a.at(0).get<int>(), v = a.at(1).get<int>();
      if (u < 1 || u > n || v < 1 || v > n)
        throw std::invalid_argument("digraph: arc endpoint out of range (1-based)");
      arcs.emplace_back(u - 1, v - 1);
    }
  }
  std::vector<Label> vlabels, alabels;
  if (j.contains("vertex_labels"))
    for (const Json& e : j.at("vertex_labels")) vlabels.push_back(label_from_json(e));
  if (j.contains("arc_labels"))
    for (const Json& e : j.at("arc_labels")) alabels.push_back(label_from_json(e));
  return LabelledDigraph::make(n, std::move(arcs), std::move(vlabels), std::move(alabels));
}

Json digraph_to_json(const LabelledDigraph& g) {
  Json j;
  j["n"] = g.degree();
  Json arcs = Json::array();
  for (auto [u, v] : g.arcs()) {
    Json a = Json::array();
    a.push_back(u + 1);
    a.push_back(v + 1);
    arcs.push_back(a);
  }
  j["arcs"] = arcs;
  Json vl = Json::array();
  for (const Label& l : g.vertex_labels()) vl.push_back(label_to_json(l));
  j["vertex_labels"] = vl;
  Json al = Json::array();
  for (const Label& l : g.arc_labels()) al.push_back(label_to_json(l));
  j["arc_labels"] = al;
  return j;
}

std::vector<Permutation> perms_from_json(const Json& j, int degree) {
  std::vector<Permutation> out;
  for (const Json& e : j) out.push_back(Permutation::parse(e.get<std::string>(), degree));
  return out;
}

GroupStrategy strategy_from_string(const std::string& s) {
  if (s == "orbits") return GroupStrategy::Orbits;
  if (s == "orbital_graphs") return GroupStrategy::OrbitalGraphs;
  throw std::invalid_argument("unknown strategy: " + s);
}

std::string strategy_to_string(GroupStrategy s) {
  return s == GroupStrategy::Orbits ? "orbits" : "orbital_graphs";
}

}  // namespace

LabelledDigraph digraph_from_json_text(const std::string& json_text) {
  return digraph_from_json(Json::parse(json_text));
}

std::string digraph_to_json_text(const LabelledDigraph& g) { return digraph_to_json(g).dump(); }

ProblemSpec parse_problem_spec(const std::string& json_text) {
  Json j = Json::parse(json_text);
  ProblemSpec spec;
  spec.degree = j.at("degree").get<int>();
  if (spec.degree < 1) throw std::invalid_argument("spec: degree must be positive");
  if (j.contains("goal")) spec.goal = goal_from_string(j.at("goal").get<std::string>());
  if (j.contains("mode")) spec.mode = mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();

  for (const Json& cj : j.value("constraints", Json::array())) {
    const std::string type = cj.at("type").get<std::string>();
    Constraint c;
    using K = Constraint::Kind;
    if (type == "set_stab") {
      c.kind = K::SetStab;
      c.from_sets = {points_from_json(cj.at("set"), spec.degree, "set_stab")};
    } else if (type == "set_transport") {
      c.kind = K::SetTransport;
      c.from_sets = {points_from_json(cj.at("from"), spec.degree, "set_transport")};
      c.to_sets = {points_from_json(cj.at("to"), spec.degree, "set_transport")};
    } else if (type == "list_stab") {
      c.kind = K::ListStab;
      c.from_sets = families_from_json(cj.at("list"), spec.degree, "list_stab");
    } else if (type == "list_transport") {
      c.kind = K::ListTransport;
      c.from_sets = families_from_json(cj.at("from"), spec.degree, "list_transport");
      c.to_sets = families_from_json(cj.at("to"), spec.degree, "list_transport");
    } else if (type == "sets_stab") {
      c.kind = K::SetsStab;
      c.from_sets = families_from_json(cj.at("sets"), spec.degree, "sets_stab");
    } else if (type == "sets_transport") {
      c.kind = K::SetsTransport;
      c.from_sets = families_from_json(cj.at("from"), spec.degree, "sets_transport");
      c.to_sets = families_from_json(cj.at("to"), spec.degree, "sets_transport");
    } else if (type == "disjoint_stab") {
      c.kind = K::DisjointStab;
      c.from_sets = families_from_json(cj.at("sets"), spec.degree, "disjoint_stab");
    } else if (type == "disjoint_transport") {
      c.kind = K::DisjointTransport;
      c.from_sets = families_from_json(cj.at("from"), spec.degree, "disjoint_transport");
      c.to_sets = families_from_json(cj.at("to"), spec.degree, "disjoint_transport");
    } else if (type == "centralise") {
      c.kind = K::Centralise;
      c.from_perm = Permutation::parse(cj.at("perm").get<std::string>(), spec.degree);
    } else if (type == "conjugate") {
      c.kind = K::Conjugate;
      c.from_perm = Permutation::parse(cj.at("from").get<std::string>(), spec.degree);
      c.to_perm = Permutation::parse(cj.at("to").get<std::string>(), spec.degree);
    } else if (type == "digraph_auto") {
      c.kind = K::DigraphAuto;
      c.from_digraph = digraph_from_json(cj.at("digraph"));
    } else if (type == "digraph_iso") {
      c.kind = K::DigraphIso;
      c.from_digraph = digraph_from_json(cj.at("from"));
      c.to_digraph = digraph_from_json(cj.at("to"));
    } else if (type == "in_group" || type == "in_coset") {
      c.kind = type == "in_group" ? K::InGroup : K::InCoset;
      c.generators = perms_from_json(cj.at("generators"), spec.degree);
      if (c.kind == K::InCoset)
        c.to_perm = Permutation::parse(cj.at("representative").get<std::string>(), spec.degree);
      if (cj.contains("strategy"))
        c.strategy = strategy_from_string(cj.at("strategy").get<std::string>());
    } else {
      throw std::invalid_argument("unknown constraint type: " + type);
    }
    if (c.from_digraph && c.from_digraph->degree() != spec.degree)
      throw std::invalid_argument("constraint digraph degree differs from the spec degree");
    if (c.to_digraph && c.to_digraph->degree() != spec.degree)
      throw std::invalid_argument("constraint digraph degree differs from the spec degree");
    spec.constraints.push_back(std::move(c));
  }
  return spec;
}

std::string problem_spec_to_json(const ProblemSpec& spec) {
  Json j;
  j["degree"] = spec.degree;
  j["goal"] = to_string(spec.goal);
  j["mode"] = to_string(spec.mode);
  j["seed"] = spec.seed;
  Json cs = Json::array();
  for (const Constraint& c : spec.constraints) {
    Json cj;
    using K = Constraint::Kind;
    switch (c.kind) {
      case K::SetStab:
        cj["type"] = "set_stab";
        cj["set"] = points_to_json(c.from_sets[0]);
        break;
      case K::SetTransport:
        cj["type"] = "set_transport";
        cj["from"] = points_to_json(c.from_sets[0]);
        cj["to"] = points_to_json(c.to_sets[0]);
        break;
      case K::ListStab:
        cj["type"] = "list_stab";
        cj["list"] = families_to_json(c.from_sets);
        break;
      case K::ListTransport:
        cj["type"] = "list_transport";
        cj["from"] = families_to_json(c.from_sets);
        cj["to"] = families_to_json(c.to_sets);
        break;
      case K::SetsStab:
        cj["type"] = "sets_stab";
        cj["sets"] = families_to_json(c.from_sets);
        break;
      case K::SetsTransport:
        cj["type"] = "sets_transport";
        cj["from"] = families_to_json(c.from_sets);
        cj["to"] = families_to_json(c.to_sets);
        break;
      case K::DisjointStab:
        cj["type"] = "disjoint_stab";
        cj["sets"] = families_to_json(c.from_sets);
        break;
      case K::DisjointTransport:
        cj["type"] = "disjoint_transport";
        cj["from"] = families_to_json(c.from_sets);
        cj["to"] = families_to_json(c.to_sets);
        break;
      case K::Centralise:
        cj["type"] = "centralise";
        cj["perm"] = c.from_perm->str();
        break;
      case K::Conjugate:
        cj["type"] = "conjugate";
        cj["from"] = c.from_perm->str();
        cj["to"] = c.to_perm->str();
        break;
      case K::DigraphAuto:
        cj["type"] = "digraph_auto";
        cj["digraph"] = digraph_to_json(*c.from_digraph);
        break;
      case K::DigraphIso:
        cj["type"] = "digraph_iso";
        cj["from"] = digraph_to_json(*c.from_digraph);
        cj["to"] = digraph_to_json(*c.to_digraph);
        break;
      case K::InGroup:
      case K::InCoset: {
        cj["type"] = c.kind == K::InGroup ? "in_group" : "in_coset";
        Json gens = Json::array();
        for (const Permutation& g : c.generators) gens.push_back(g.str());
        cj["generators"] = gens;
        if (c.kind == K::InCoset) cj["representative"] = c.to_perm->str();
        if (c.strategy) cj["strategy"] = strategy_to_string(*c.strategy);
        break;
      }
    }
    cs.push_back(cj);
  }
  j["constraints"] = cs;
  return j.dump(2);
}

std::vector<RefinerPtr> build_refiners(const ProblemSpec& spec) {
  RefinerOptions opts;
  opts.strip_arcs = spec.mode == Mode::Leon;
  const int n = spec.degree;

  std::vector<RefinerPtr> out;
  for (const Constraint& c : spec.constraints) {
    using K = Constraint::Kind;
    GroupStrategy strategy = spec.mode == Mode::Leon
                                 ? GroupStrategy::Orbits
                                 : c.strategy.value_or(GroupStrategy::OrbitalGraphs);
    switch (c.kind) {
      case K::SetStab:
        out.push_back(set_refiner(n, c.from_sets[0], c.from_sets[0], opts));
        break;
      case K::SetTransport:
        out.push_back(set_refiner(n, c.from_sets[0], c.to_sets[0], opts));
        break;
      case K::ListStab:
        out.push_back(list_of_subsets_refiner(n, c.from_sets, c.from_sets, opts));
        break;
      case K::ListTransport:
        out.push_back(list_of_subsets_refiner(n, c.from_sets, c.to_sets, opts));
        break;
      case K::SetsStab:
        out.push_back(set_of_subsets_refiner(n, c.from_sets, c.from_sets, opts));
        break;
      case K::SetsTransport:
        out.push_back(set_of_subsets_refiner(n, c.from_sets, c.to_sets, opts));
        break;
      case K::DisjointStab:
        out.push_back(disjoint_subsets_refiner(n, c.from_sets, c.from_sets, opts));
        break;
      case K::DisjointTransport:
        out.push_back(disjoint_subsets_refiner(n, c.from_sets, c.to_sets, opts));
        break;
      case K::Centralise:
        out.push_back(perm_conjugacy_refiner(*c.from_perm, *c.from_perm, opts));
        break;
      case K::Conjugate:
        out.push_back(perm_conjugacy_refiner(*c.from_perm, *c.to_perm, opts));
        break;
      case K::DigraphAuto: {
        LabelledDigraph g = *c.from_digraph;
        out.push_back(digraph_iso_refiner(g, g, opts));
        break;
      }
      case K::DigraphIso:
        out.push_back(digraph_iso_refiner(*c.from_digraph, *c.to_digraph, opts));
        break;
      case K::InGroup:
        out.push_back(group_refiner(PermGroup(n, c.generators), strategy));
        break;
      case K::InCoset:
        out.push_back(coset_refiner(PermGroup(n, c.generators), *c.to_perm, strategy));
        break;
    }
  }
  return out;
}

RunReport run(const ProblemSpec& spec, const SearchOptions& extra) {
  RunReport report;
  report.spec = spec;

  SearchOptions opts = extra;
  opts.approx = approx_kind(spec.mode);
  std::vector<RefinerPtr> refiners = build_refiners(spec);
  SearchEngine engine(spec.degree, refiners, opts);

  auto t0 = std::chrono::steady_clock::now();
  switch (spec.goal) {
    case Goal::All:
      report.elements = engine.find_all();
      break;
    case Goal::Single:
      report.single = engine.find_one();
      break;
    case Goal::Group: {
      Permutation id(spec.degree);
      bool all_groups = true;
      for (const RefinerPtr& r : refiners)
        if (!r->member(id)) {
          all_groups = false;
          break;
        }
      if (all_groups) {
        report.group = engine.find_generators();
        report.group_order = PermGroup(spec.degree, report.group->strong_generators).order();
      } else {
        SearchEngine::CosetSolution sol = engine.find_coset();
        if (!sol.empty) {
          report.group = sol.group;
          report.representative = sol.representative;
          report.group_order = PermGroup(spec.degree, sol.group.strong_generators).order();
        }
      }
      break;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  report.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.stats = engine.stats();
  return report;
}

std::string report_to_json(const RunReport& report) {
  Json j;
  j["degree"] = report.spec.degree;
  j["goal"] = to_string(report.spec.goal);
  j["mode"] = to_string(report.spec.mode);
  j["seed"] = report.spec.seed;
  j["nodes"] = report.stats.nodes;
  j["leaves"] = report.stats.leaves;
  j["refiner_calls"] = report.stats.refiner_calls;
  j["approx_calls"] = report.stats.approx_calls;
  j["ms"] = report.millis;

  Json result;
  switch (report.spec.goal) {
    case Goal::All: {
      Json elems = Json::array();
      for (const Permutation& p : report.elements) elems.push_back(p.str());
      result["elements"] = elems;
      result["count"] = report.elements.size();
      break;
    }
    case Goal::Single:
      result["element"] = report.single ? Json(report.single->str()) : Json(nullptr);
      break;
    case Goal::Group: {
      if (!report.group) {
        result["empty"] = true;
      } else {
        Json gens = Json::array();
        for (const Permutation& g : report.group->strong_generators) gens.push_back(g.str());
        result["generators"] = gens;
        result["base"] = points_to_json(report.group->base);
        result["order"] = report.group_order->str();
        if (report.representative) result["representative"] = report.representative->str();
      }
      break;
    }
  }
  j["result"] = result;
  if (report.oracle_checked) j["oracle_agrees"] = report.oracle_agrees;
  return j.dump(2);
}

}  // namespace dgs
