#include "p5col/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace p5col {

bool is_module(const Graph& g, std::span<const Vertex> m) {
  if (m.empty()) return true;
  std::vector<char> in(g.n(), 0);
  for (Vertex v : m) in[v] = 1;
  std::vector<int> seen(g.n(), 0);
  for (Vertex v : m) {
    for (Vertex x : g.neighbors(v)) {
      if (!in[x]) ++seen[x];
    }
  }
  const int size = static_cast<int>(m.size());
  for (Vertex x = 0; x < g.n(); ++x) {
    if (!in[x] && seen[x] != 0 && seen[x] != size) return false;
  }
  return true;
}

VertexSet module_closure(const Graph& g, std::span<const Vertex> seed) {
  const int n = g.n();
  std::vector<char> in(n, 0);
  std::vector<int> count(n, 0);  // neighbors inside the module
  int size = 0;
  auto add = [&](Vertex x) {
    in[x] = 1;
    ++size;
    for (Vertex y : g.neighbors(x)) ++count[y];
  };
  for (Vertex v : seed) {
    if (!in[v]) add(v);
  }
  bool changed = true;
  while (changed && size < n) {
    changed = false;
    for (Vertex x = 0; x < n; ++x) {
      if (!in[x] && count[x] > 0 && count[x] < size) {
        add(x);
        changed = true;
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool is_prime(const Graph& g) {
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const Vertex pair[] = {u, v};
      if (static_cast<int>(module_closure(g, pair).size()) != g.n()) return false;
    }
  }
  return true;
}

std::vector<VertexSet> maximal_modules(const Graph& g) {
  const int n = g.n();
  std::vector<int> part(n, -1);
  std::vector<VertexSet> out;
  for (Vertex u = 0; u < n; ++u) {
    if (part[u] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<char> member(n, 0);
    member[u] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (part[v] >= 0 || member[v]) continue;
      const Vertex pair[] = {u, v};
      VertexSet m = module_closure(g, pair);
      if (static_cast<int>(m.size()) == n) continue;
      for (Vertex x : m) member[x] = 1;
    }
    VertexSet mod;
    for (Vertex x = 0; x < n; ++x) {
      if (member[x]) {
        mod.push_back(x);
        part[x] = id;
      }
    }
    out.push_back(std::move(mod));
  }
  return out;
}

Quotient quotient(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> owner(g.n(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("empty part");
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= g.n() || owner[v] != -1) {
        throw std::invalid_argument("parts do not partition the vertex set");
      }
      owner[v] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw std::invalid_argument("parts do not cover the vertex set");
  }
  Quotient q;
  for (const auto& part : parts) {
    if (!is_module(g, part)) {
      throw std::invalid_argument("part containing vertex " +
                                  std::to_string(part[0]) + " is not a module");
    }
    q.representatives.push_back(*std::min_element(part.begin(), part.end()));
  }
  q.graph = induced(g, q.representatives).graph;
  return q;
}

const char* to_string(MDKind kind) {
  switch (kind) {
    case MDKind::Vertex: return "vertex";
    case MDKind::Parallel: return "parallel";
    case MDKind::Series: return "series";
    case MDKind::Prime: return "prime";
  }
  return "?";
}

namespace {

std::vector<VertexSet> lift(const Induced& sub, const std::vector<VertexSet>& local) {
  std::vector<VertexSet> out;
  for (const auto& s : local) {
    VertexSet h;
    for (Vertex v : s) h.push_back(sub.to_host[v]);
    std::sort(h.begin(), h.end());
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

int build_md(const Graph& g, VertexSet vertices, MDTree& t) {
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({});
  t.nodes[id].vertices = vertices;
  if (vertices.size() == 1) return id;

  Induced sub = induced(g, vertices);
  std::vector<VertexSet> parts;
  MDKind kind;
  if (auto comps = components(sub.graph); comps.size() >= 2) {
    kind = MDKind::Parallel;
    parts = lift(sub, comps);
  } else if (auto cocomps = co_components(sub.graph); cocomps.size() >= 2) {
    kind = MDKind::Series;
    parts = lift(sub, cocomps);
  } else {
    kind = MDKind::Prime;
    parts = lift(sub, maximal_modules(sub.graph));
  }

  std::vector<int> children;
  for (auto& part : parts) children.push_back(build_md(g, part, t));
  MDNode& node = t.nodes[id];
  node.kind = kind;
  node.children = std::move(children);
  if (kind == MDKind::Prime) {
    for (const auto& part : parts) node.representatives.push_back(part[0]);
    node.quotient = induced(g, node.representatives).graph;
  }
  return id;
}

}  // namespace

MDTree md_tree(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("modular decomposition needs n >= 1");
  MDTree t;
  VertexSet all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  t.root = build_md(g, std::move(all), t);
  return t;
}

std::optional<std::string> md_tree_error(const Graph& g, const MDTree& t) {
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) {
    return std::string("missing root");
  }
  if (static_cast<int>(t.nodes[t.root].vertices.size()) != g.n()) {
    return std::string("root does not span V(g)");
  }
  std::vector<int> stack{t.root};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (++visited > t.nodes.size()) return std::string("tree has a cycle");
    const MDNode& node = t.nodes[id];
    const std::string where = "node " + std::to_string(id) + ": ";
    if (node.kind == MDKind::Vertex) {
      if (node.vertices.size() != 1 || !node.children.empty()) {
        return where + "vertex leaf must span one vertex";
      }
      continue;
    }
    if (node.children.size() < 2) return where + "internal node with fewer than two children";

    Induced parent = induced(g, node.vertices);
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < node.vertices.size(); ++i) {
      local[node.vertices[i]] = static_cast<int>(i);
    }
    std::vector<VertexSet> child_sets;
    std::vector<int> owner(node.vertices.size(), -1);
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      const int child = node.children[c];
      if (child < 0 || child >= static_cast<int>(t.nodes.size())) return where + "bad child index";
      VertexSet s;
      for (Vertex v : t.nodes[child].vertices) {
        if (v < 0 || v >= g.n() || local[v] < 0 || owner[local[v]] >= 0) {
          return where + "children do not partition the node";
        }
        owner[local[v]] = static_cast<int>(c);
        s.push_back(local[v]);
      }
      if (!is_module(parent.graph, s)) {
        return where + "child " + std::to_string(child) + " is not a module";
      }
      std::sort(s.begin(), s.end());
      child_sets.push_back(std::move(s));
      stack.push_back(child);
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
      return where + "children do not cover the node";
    }
    std::sort(child_sets.begin(), child_sets.end());
    if (node.kind == MDKind::Parallel || node.kind == MDKind::Series) {
      auto expected = node.kind == MDKind::Parallel ? components(parent.graph)
                                                    : co_components(parent.graph);
      std::sort(expected.begin(), expected.end());
      if (expected != child_sets) {
        return where + (node.kind == MDKind::Parallel ? "children are not the components"
                                                      : "children are not the co-components");
      }
      continue;
    }
    // Prime
    if (node.children.size() < 4) return where + "prime node with fewer than four children";
    if (node.representatives.size() != node.children.size()) {
      return where + "representative count mismatch";
    }
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      const auto& span = t.nodes[node.children[c]].vertices;
      if (!std::binary_search(span.begin(), span.end(), node.representatives[c])) {
        return where + "representative outside its child";
      }
    }
    if (!(node.quotient == induced(g, node.representatives).graph)) {
      return where + "quotient does not match the representatives";
    }
    if (!is_prime(node.quotient)) return where + "quotient is not prime";
  }
  return std::nullopt;
}

namespace {

int color_md(const Graph& g, const MDTree& t, int id, const VertexWeights& w,
             const PrimeSolver& solve_prime, std::vector<std::vector<int>>& colors) {
  const MDNode& node = t.nodes[id];
  switch (node.kind) {
    case MDKind::Vertex: {
      const Vertex v = node.vertices[0];
      auto& set = colors[v];
      set.resize(w[v]);
      for (int c = 0; c < w[v]; ++c) set[c] = c + 1;
      return w[v];
    }
    case MDKind::Parallel: {
      int k = 0;
      for (int child : node.children) {
        k = std::max(k, color_md(g, t, child, w, solve_prime, colors));
      }
      return k;
    }
    case MDKind::Series: {
      int offset = 0;
      for (int child : node.children) {
        const int k = color_md(g, t, child, w, solve_prime, colors);
        for (Vertex v : t.nodes[child].vertices) {
          for (int& c : colors[v]) c += offset;
        }
        offset += k;
      }
      return offset;
    }
    case MDKind::Prime: {
      std::vector<int> child_chi;
      for (int child : node.children) {
        child_chi.push_back(color_md(g, t, child, w, solve_prime, colors));
      }
      VertexWeights contracted(child_chi);
      MultiColoring qc = solve_prime(node.quotient, contracted, node);
      if (auto err = multicoloring_error(node.quotient, contracted, qc)) {
        throw std::logic_error("prime solver returned an invalid coloring: " + *err);
      }
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        const auto& pool = qc.colors[i];
        for (Vertex v : t.nodes[node.children[i]].vertices) {
          for (int& c : colors[v]) c = pool[c - 1];
          std::sort(colors[v].begin(), colors[v].end());
        }
      }
      return qc.num_colors;
    }
  }
  return 0;
}

}  // namespace

MultiColoring chi_w(const Graph& g, const MDTree& t, const VertexWeights& w,
                    const PrimeSolver& solve_prime) {
  if (w.size() != g.n()) throw std::invalid_argument("weights do not match the graph");
  MultiColoring out;
  out.colors.resize(g.n());
  if (g.n() == 0) return out;
  out.num_colors = color_md(g, t, t.root, w, solve_prime, out.colors);
  if (auto err = multicoloring_error(g, w, out)) {
    throw std::logic_error("composed weighted coloring is invalid: " + *err);
  }
  return out;
}

MultiColoring chi_w(const Graph& g, const VertexWeights& w, const PrimeSolver& solve_prime) {
  if (g.n() == 0) return chi_w(g, MDTree{}, w, solve_prime);
  return chi_w(g, md_tree(g), w, solve_prime);
}

}  // namespace p5col
