#include "p5col/cliquesep.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace p5col {

namespace {

// madj(v) for the minimal triangulation given by MCS-M: the neighbors of v
// in the filled graph that are eliminated after v.
std::vector<VertexSet> mcs_m_higher_neighbors(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<VertexSet> madj(n);
  std::vector<int> dist(n);
  constexpr int kUnreached = std::numeric_limits<int>::max();
  using Item = std::pair<int, Vertex>;

  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
    }
    numbered[v] = 1;

    // dist[u]: smallest possible maximum weight of the interior of a path
    // v ~> u through unnumbered vertices; -1 for direct neighbors.
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex u : g.neighbors(v)) {
      if (!numbered[u]) {
        dist[u] = -1;
        pq.emplace(-1, u);
      }
    }
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d != dist[x]) continue;
      const int through = std::max(d, weight[x]);
      for (Vertex y : g.neighbors(x)) {
        if (numbered[y] || through >= dist[y]) continue;
        dist[y] = through;
        pq.emplace(through, y);
      }
    }
    std::vector<Vertex> reached;
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u] && dist[u] < weight[u]) reached.push_back(u);
    }
    for (Vertex u : reached) {
      ++weight[u];
      madj[u].push_back(v);
    }
  }
  for (auto& s : madj) std::sort(s.begin(), s.end());
  return madj;
}

// Components of g - removed, each sorted, ordered by smallest member.
std::vector<VertexSet> components_without(const Graph& g, const std::vector<char>& removed) {
  std::vector<VertexSet> out;
  std::vector<char> seen(removed);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<char> mask_of(int n, std::span<const Vertex> s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet to_host(const Induced& sub, const VertexSet& local) {
  VertexSet out;
  for (Vertex v : local) out.push_back(sub.to_host[v]);
  std::sort(out.begin(), out.end());
  return out;
}

int build_node(const Graph& g, VertexSet vertices, CDecompTree& tree) {
  Induced sub = induced(g, vertices);
  auto sep = find_clique_separator(sub.graph);
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({vertices, {}, -1, -1});
  if (!sep) return id;
  VertexSet q = to_host(sub, sep->separator);
  VertexSet left = set_union(to_host(sub, sep->a), q);
  VertexSet right = set_union(to_host(sub, sep->b), q);
  const int l = build_node(g, std::move(left), tree);
  const int r = build_node(g, std::move(right), tree);
  tree.nodes[id].separator = std::move(q);
  tree.nodes[id].left = l;
  tree.nodes[id].right = r;
  return id;
}

}  // namespace

std::optional<CliqueSeparation> find_clique_separator(const Graph& g) {
  const int n = g.n();
  auto comps = components(g);
  if (comps.size() >= 2) {
    CliqueSeparation out;
    out.a = comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i) {
      out.b.insert(out.b.end(), comps[i].begin(), comps[i].end());
    }
    std::sort(out.b.begin(), out.b.end());
    return out;
  }
  if (n < 3) return std::nullopt;

  std::set<VertexSet> candidates;
  for (auto& s : mcs_m_higher_neighbors(g)) {
    if (!s.empty()) candidates.insert(std::move(s));
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> closed(n, 0);
    closed[v] = 1;
    for (Vertex w : g.neighbors(v)) closed[w] = 1;
    for (const auto& comp : components_without(g, closed)) {
      std::vector<char> in_comp = mask_of(n, comp);
      std::vector<char> boundary(n, 0);
      for (Vertex x : comp) {
        for (Vertex y : g.neighbors(x)) {
          if (!in_comp[y]) boundary[y] = 1;
        }
      }
      VertexSet s;
      for (Vertex y = 0; y < n; ++y) {
        if (boundary[y]) s.push_back(y);
      }
      if (!s.empty()) candidates.insert(std::move(s));
    }
  }

  for (const auto& s : candidates) {  // std::set iterates lexicographically
    if (!is_clique(g, s)) continue;
    auto parts = components_without(g, mask_of(n, s));
    if (parts.size() < 2) continue;
    CliqueSeparation out;
    out.separator = s;
    out.a = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out.b.insert(out.b.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(out.b.begin(), out.b.end());
    return out;
  }
  return std::nullopt;
}

std::vector<int> CDecompTree::leaves() const {
  std::vector<int> out;
  if (root < 0) return out;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (nodes[i].is_leaf()) {
      out.push_back(i);
    } else {
      stack.push_back(nodes[i].right);
      stack.push_back(nodes[i].left);
    }
  }
  return out;
}

CDecompTree build_cdecomp_tree(const Graph& g) {
  CDecompTree tree;
  VertexSet all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  tree.root = build_node(g, std::move(all), tree);
  return tree;
}

std::optional<std::string> cdecomp_error(const Graph& g, const CDecompTree& t) {
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
    const auto& node = t.nodes[id];
    const std::string where = "node " + std::to_string(id) + ": ";
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end())) {
      return where + "vertex set not sorted";
    }
    if (node.is_leaf()) {
      if (!node.separator.empty()) return where + "leaf carries a separator";
      if (find_clique_separator(induced(g, node.vertices).graph)) {
        return where + "leaf block has a clique separator";
      }
      continue;
    }
    const int n_nodes = static_cast<int>(t.nodes.size());
    if (node.right < 0 || node.left >= n_nodes || node.right >= n_nodes) {
      return where + "bad child index";
    }
    const auto& l = t.nodes[node.left].vertices;
    const auto& r = t.nodes[node.right].vertices;
    const auto& q = node.separator;
    if (!is_clique(g, q)) return where + "separator is not a clique";
    if (set_intersection(l, r) != q) return where + "children do not meet exactly in the separator";
    if (set_union(l, r) != node.vertices) return where + "children do not cover the node";
    VertexSet a = set_difference(l, q);
    VertexSet b = set_difference(r, q);
    if (a.empty() || b.empty()) return where + "trivial split";
    auto in_b = mask_of(g.n(), b);
    for (Vertex x : a) {
      for (Vertex y : g.neighbors(x)) {
        if (in_b[y]) {
          return where + "edge " + std::to_string(x) + "-" + std::to_string(y) +
                 " crosses the separator";
        }
      }
    }
    stack.push_back(node.left);
    stack.push_back(node.right);
  }
  return std::nullopt;
}

namespace {

// Colors of the subtree rooted at `id`, indexed by host vertex (0 outside).
int compose_node(const Graph& g, const CDecompTree& t, int id,
                 const LeafSolver& solve_leaf, std::vector<int>& color) {
  const auto& node = t.nodes[id];
  if (node.is_leaf()) {
    Induced block = induced(g, node.vertices);
    Coloring c = solve_leaf(block.graph, node.vertices);
    if (auto err = coloring_error(block.graph, c)) {
      throw std::logic_error("leaf solver returned an invalid coloring: " + *err);
    }
    for (std::size_t i = 0; i < node.vertices.size(); ++i) {
      color[node.vertices[i]] = c.color[i];
    }
    return c.num_colors;
  }

  std::vector<int> left(g.n(), 0);
  std::vector<int> right(g.n(), 0);
  const int kl = compose_node(g, t, node.left, solve_leaf, left);
  const int kr = compose_node(g, t, node.right, solve_leaf, right);
  const bool left_big = kl >= kr;
  const auto& big = left_big ? left : right;
  const auto& small = left_big ? right : left;
  const int k_big = std::max(kl, kr);
  const int k_small = std::min(kl, kr);
  const auto& small_vertices = t.nodes[left_big ? node.right : node.left].vertices;

  // Rename the small side: separator colors follow the big side, the rest
  // go to big-side colors not used on the separator, in increasing order.
  std::vector<int> rename(k_small + 1, 0);
  std::vector<char> taken(k_big + 1, 0);
  for (Vertex q : node.separator) {
    rename[small[q]] = big[q];
    taken[big[q]] = 1;
  }
  int next = 1;
  for (int c = 1; c <= k_small; ++c) {
    if (rename[c] != 0) continue;
    while (next <= k_big && taken[next]) ++next;
    if (next > k_big) throw std::logic_error("separator is not properly colored");
    rename[c] = next;
    taken[next] = 1;
  }

  for (Vertex v : t.nodes[left_big ? node.left : node.right].vertices) color[v] = big[v];
  for (Vertex v : small_vertices) {
    if (!std::binary_search(node.separator.begin(), node.separator.end(), v)) {
      color[v] = rename[small[v]];
    }
  }
  return k_big;
}

}  // namespace

Coloring chi_compose(const Graph& g, const CDecompTree& t, const LeafSolver& solve_leaf) {
  std::vector<int> color(g.n(), 0);
  Coloring out;
  out.num_colors = compose_node(g, t, t.root, solve_leaf, color);
  out.color = std::move(color);
  if (auto err = coloring_error(g, out)) {
    throw std::logic_error("composed coloring is invalid: " + *err);
  }
  return out;
}

}  // namespace p5col
