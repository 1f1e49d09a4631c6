#include "p5col/serialize.hpp"

#include <string>

#include "p5col/errors.hpp"

namespace p5col {

namespace {

Json cdecomp_node(const CDecompTree& t, int id) {
  const auto& node = t.nodes[id];
  Json j;
  j["type"] = node.is_leaf() ? "leaf" : "node";
  j["vertices"] = node.vertices;
  if (!node.is_leaf()) {
    j["separator"] = node.separator;
    j["left"] = cdecomp_node(t, node.left);
    j["right"] = cdecomp_node(t, node.right);
  }
  return j;
}

Json md_node(const MDTree& t, int id) {
  const auto& node = t.nodes[id];
  Json j;
  j["type"] = to_string(node.kind);
  j["vertices"] = node.vertices;
  if (node.kind == MDKind::Vertex) return j;
  Json children = Json::array();
  for (int c : node.children) children.push_back(md_node(t, c));
  j["children"] = std::move(children);
  if (node.kind == MDKind::Prime) {
    Json edges = Json::array();
    for (auto [u, v] : node.quotient.edges()) edges.push_back({u, v});
    j["quotient"] = {{"n", node.quotient.n()},
                     {"edges", std::move(edges)},
                     {"representatives", node.representatives}};
  }
  return j;
}

template <class Map>
Json int_map(const Map& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

Json to_json(const CDecompTree& t) {
  if (t.root < 0) return nullptr;
  return cdecomp_node(t, t.root);
}

Json to_json(const MDTree& t) {
  if (t.root < 0) return nullptr;
  return md_node(t, t.root);
}

Json to_json(const Witness& w) { return {{"pattern", w.pattern}, {"vertices", w.vertices}}; }

Json coloring_to_json(const MultiColoring& c) {
  Json j = Json::object();
  for (std::size_t v = 0; v < c.colors.size(); ++v) j[std::to_string(v)] = c.colors[v];
  return j;
}

MultiColoring coloring_from_json(const nlohmann::json& j, int n) {
  const nlohmann::json& obj = j.contains("coloring") ? j.at("coloring") : j;
  if (!obj.is_object()) throw ParseError(0, "coloring must be a JSON object");
  MultiColoring c;
  c.colors.resize(n);
  for (const auto& [key, value] : obj.items()) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) v = -1;
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= n) throw ParseError(0, "coloring key '" + key + "' is not a vertex");
    if (!value.is_array()) throw ParseError(0, "colors of vertex " + key + " must be an array");
    for (const auto& col : value) {
      if (!col.is_number_integer()) throw ParseError(0, "colors must be integers");
      const int x = col.get<int>();
      c.colors[v].push_back(x);
      c.num_colors = std::max(c.num_colors, x);
    }
    std::sort(c.colors[v].begin(), c.colors[v].end());
  }
  return c;
}

Json to_json(const SolveReport& r, bool with_timing) {
  Json j;
  j["class"] = r.graph_class.name();
  if (r.graph_class.kind == GraphClass::Kind::P5Kpe) {
    j["p"] = r.graph_class.p;
  } else {
    j["p"] = nullptr;
  }
  j["n"] = r.n;
  j["chi"] = r.chi;
  if (!r.weights.is_unit()) j["weights"] = std::vector<int>(r.weights.values().begin(), r.weights.values().end());
  j["coloring"] = coloring_to_json(r.coloring);
  Json routes = Json::array();
  for (const auto& route : r.routes) {
    routes.push_back({{"route", to_string(route.route)},
                      {"vertices", route.vertices},
                      {"chi", route.chi},
                      {"checked", route.berge_checked}});
  }
  j["routes"] = std::move(routes);
  std::visit([&](const auto& t) { j["tree"] = to_json(t); }, r.tree);
  if (with_timing) j["ms"] = r.ms;
  return j;
}

Json to_json(const Lemma5Report& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"n", l.n},
                      {"members", l.members},
                      {"prime_connected", l.prime_connected},
                      {"berge", l.berge},
                      {"c5", l.c5},
                      {"counterexamples", l.counterexamples}});
  }
  Json bad = Json::array();
  for (const auto& g : r.counterexamples) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    bad.push_back({{"n", g.n()}, {"edges", std::move(edges)}});
  }
  return {{"check", "lemma5"}, {"ok", r.ok()}, {"levels", std::move(levels)},
          {"counterexamples", std::move(bad)}};
}

Json to_json(const Lemma4Report& r) {
  return {{"check", "lemma4"},         {"ok", r.ok()},
          {"p", r.p},                  {"clique_bound", r.bound},
          {"graphs", r.graphs},        {"blocks", r.blocks},
          {"o3_free", r.o3_free},      {"bounded_only", r.bounded_only},
          {"violations", r.violations}, {"block_sizes", int_map(r.block_sizes)}};
}

Json to_json(const GyarfasReport& r) {
  return {{"check", "gyarfas"},
          {"ok", r.ok()},
          {"samples", r.samples},
          {"violations", r.violations},
          {"max_chi_by_omega", int_map(r.max_chi_by_omega)}};
}

Json to_json(const CrossCheckReport& r) {
  Json routes = Json::object();
  for (const auto& [k, v] : r.routes) routes[k] = v;
  return {{"check", "oracle"},
          {"ok", r.ok()},
          {"class", r.graph_class},
          {"weighted", r.weighted},
          {"samples", r.samples},
          {"mismatches", r.mismatches},
          {"invalid_colorings", r.invalid_colorings},
          {"tree_errors", r.tree_errors},
          {"route_errors", r.route_errors},
          {"routes", std::move(routes)},
          {"sizes", int_map(r.sizes)},
          {"failures", r.failures}};
}

}  // namespace p5col
