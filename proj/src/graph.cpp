#include "p5col/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace p5col {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} out of range for n=" +
                                  std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) continue;
    bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.n();
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.m());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Induced induced(const Graph& g, std::span<const Vertex> s) {
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vertex v = s[i];
    if (v < 0 || v >= g.n()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range");
    }
    if (local[v] != -1) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
    }
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      int j = local[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph(static_cast<int>(s.size()), edges), {s.begin(), s.end()}};
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
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

std::vector<VertexSet> co_components(const Graph& g) {
  // BFS in the complement over the shrinking set of unvisited vertices.
  std::vector<VertexSet> out;
  std::vector<Vertex> unvisited;
  for (Vertex v = g.n() - 1; v >= 0; --v) unvisited.push_back(v);
  std::vector<Vertex> queue;
  while (!unvisited.empty()) {
    Vertex s = unvisited.back();
    unvisited.pop_back();
    VertexSet comp{s};
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      std::vector<Vertex> keep;
      for (Vertex w : unvisited) {
        if (g.adjacent(v, w)) {
          keep.push_back(w);
        } else {
          comp.push_back(w);
          queue.push_back(w);
        }
      }
      unvisited.swap(keep);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_minus_edge(int p) {
  if (p < 2) throw std::invalid_argument("K_p - e needs p >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    }
  }
  return Graph(p, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  for (int u = 0; u < a.n(); ++u) {
    for (int v = 0; v < b.n(); ++v) edges.emplace_back(u, a.n() + v);
  }
  return Graph(a.n() + b.n(), edges);
}

}  // namespace p5col
