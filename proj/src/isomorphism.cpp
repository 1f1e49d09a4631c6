#include "p5col/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace p5col {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Per-vertex signature: degree, triangles through v, sorted neighbor degrees.
std::vector<std::uint64_t> vertex_signatures(const Graph& g) {
  std::vector<std::uint64_t> sig(g.n());
  std::vector<int> nd;
  for (Vertex v = 0; v < g.n(); ++v) {
    int triangles = 0;
    nd.clear();
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      nd.push_back(g.degree(nb[i]));
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) ++triangles;
      }
    }
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.degree(v)),
                          static_cast<std::uint64_t>(triangles));
    for (int d : nd) h = mix(h, static_cast<std::uint64_t>(d));
    sig[v] = h;
  }
  return sig;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  auto sig = vertex_signatures(g);
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.n()), g.m());
  for (auto s : sig) h = mix(h, s);
  return h;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  const int n = g.n();
  auto sg = vertex_signatures(g);
  auto sh = vertex_signatures(h);
  {
    auto a = sg;
    auto b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Map g's vertices in an order where each one (after the first of its
  // component) has an already-mapped neighbor, so adjacency prunes early.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex w : g.neighbors(v)) {
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> phi(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    Vertex v = order[i];
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || sh[x] != sg[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        Vertex u = order[j];
        ok = g.adjacent(u, v) == h.adjacent(phi[u], x);
      }
      if (!ok) continue;
      phi[v] = x;
      used[x] = 1;
      if (place(i + 1)) return true;
      used[x] = 0;
      phi[v] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

}  // namespace p5col
