#include "p5col/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "p5col/detect.hpp"

namespace p5col {

std::optional<std::string> matching_error(const Graph& g, const Matching& m) {
  std::vector<char> covered(g.n(), 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v)) {
      return "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge";
    }
    if (covered[u] || covered[v]) {
      return "vertex shared by two matching edges at " + std::to_string(u) + "-" +
             std::to_string(v);
    }
    covered[u] = covered[v] = 1;
  }
  return std::nullopt;
}

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), match_(g.n(), -1), parent_(g.n()), base_(g.n()), used_(g.n()),
        in_blossom_(g.n()) {}

  Matching run() {
    for (Vertex root = 0; root < g_.n(); ++root) {
      if (match_[root] != -1) continue;
      Vertex end = find_augmenting_path(root);
      while (end != -1) {
        Vertex pv = parent_[end];
        Vertex next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    Matching m;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
    }
    return m;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<char> seen(g_.n(), 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS over alternating trees from root; returns an exposed vertex reached
  // by an augmenting path, or -1.
  Vertex find_augmenting_path(Vertex root) {
    const int n = g_.n();
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) { return Blossom(g).run(); }

Coloring chi_o3_free(const Graph& g) {
  if (auto triple = find_independent_triple(g)) {
    const auto& t = triple->vertices;
    throw std::invalid_argument("graph is not O3-free: independent triple " +
                                std::to_string(t[0]) + " " + std::to_string(t[1]) +
                                " " + std::to_string(t[2]));
  }
  Matching m = max_matching(complement(g));
  Coloring c;
  c.color.assign(g.n(), 0);
  std::vector<Vertex> partner(g.n(), -1);
  for (auto [u, v] : m.edges) {
    partner[u] = v;
    partner[v] = u;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c.color[v] != 0) continue;
    c.color[v] = ++c.num_colors;
    if (partner[v] != -1) c.color[partner[v]] = c.color[v];
  }
  return c;
}

}  // namespace p5col
