#include "p5col/generate.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "p5col/isomorphism.hpp"
#include "p5col/modular.hpp"

namespace p5col {

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_graph(int n, double density, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < density) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<std::vector<Graph>> enumerate_class_members(int n_max, const GraphClass& cls) {
  std::vector<std::vector<Graph>> levels(std::max(n_max, 0) + 1);
  levels[0].push_back(Graph(0));
  for (int k = 1; k <= n_max; ++k) {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    auto& level = levels[k];
    for (const Graph& base : levels[k - 1]) {
      const auto old_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
        std::vector<Edge> edges = old_edges;
        for (int v = 0; v < k - 1; ++v) {
          if (mask >> v & 1U) edges.emplace_back(v, k - 1);
        }
        Graph g(k, edges);
        if (class_membership(g, cls)) continue;
        auto& bucket = buckets[invariant_hash(g)];
        bool seen = false;
        for (std::size_t idx : bucket) {
          if (are_isomorphic(level[idx], g)) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
        bucket.push_back(level.size());
        level.push_back(std::move(g));
      }
    }
  }
  return levels;
}

const std::vector<Graph>& prime_p5_cop5_seeds() {
  static const std::vector<Graph> seeds = [] {
    std::vector<Graph> out;
    auto levels = enumerate_class_members(7, GraphClass::p5_cop5());
    for (int k = 4; k <= 7; ++k) {
      for (const Graph& g : levels[k]) {
        if (is_connected(g) && is_prime(g)) out.push_back(g);
      }
    }
    return out;
  }();
  return seeds;
}

namespace {

// Random composition of n into `parts` positive summands.
std::vector<int> split(int n, int parts, Rng& rng) {
  std::vector<int> sizes(parts, 1);
  for (int extra = n - parts; extra > 0; --extra) ++sizes[uniform_int(rng, 0, parts - 1)];
  return sizes;
}

// Replace vertex i of `host` by pieces[i].
Graph substitute(const Graph& host, const std::vector<Graph>& pieces) {
  std::vector<int> offset(pieces.size() + 1, 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) offset[i + 1] = offset[i] + pieces[i].n();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (auto [u, v] : pieces[i].edges()) edges.emplace_back(offset[i] + u, offset[i] + v);
  }
  for (auto [a, b] : host.edges()) {
    for (int u = offset[a]; u < offset[a + 1]; ++u) {
      for (int v = offset[b]; v < offset[b + 1]; ++v) edges.emplace_back(u, v);
    }
  }
  return Graph(offset.back(), edges);
}

Graph build_cograph_like(int n, Rng& rng) {
  if (n == 1) return Graph(1);
  const auto& seeds = prime_p5_cop5_seeds();
  std::vector<const Graph*> eligible;
  for (const Graph& s : seeds) {
    if (s.n() <= n) eligible.push_back(&s);
  }
  const int roll = uniform_int(rng, 0, 9);
  Graph host;
  if (roll < 4 && !eligible.empty()) {
    host = *eligible[uniform_int(rng, 0, static_cast<int>(eligible.size()) - 1)];
  } else {
    const int parts = uniform_int(rng, 2, std::min(n, 4));
    host = roll % 2 == 0 ? empty_graph(parts) : complete_graph(parts);
  }
  std::vector<Graph> pieces;
  for (int size : split(n, host.n(), rng)) pieces.push_back(build_cograph_like(size, rng));
  Graph g = substitute(host, pieces);
  // Shuffle labels so vertex ids carry no structure.
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  return relabel(g, perm);
}

}  // namespace

Graph gen_p5_cop5(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_p5_cop5 needs n >= 1");
  Rng rng(seed);
  const GraphClass cls = GraphClass::p5_cop5();
  while (true) {
    Graph g = build_cograph_like(n, rng);
    if (!class_membership(g, cls)) return g;
  }
}

GeneratedGraph gen_p5_kpe(int n, int p, std::uint64_t seed, double density, int max_attempts) {
  if (n < 1) throw std::invalid_argument("gen_p5_kpe needs n >= 1");
  const GraphClass cls = GraphClass::p5_kpe(p);
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Graph g = random_graph(n, density, rng);
    if (!class_membership(g, cls)) return {std::move(g), attempt};
  }
  throw std::runtime_error("no " + cls.describe() + " graph on " + std::to_string(n) +
                           " vertices accepted after " + std::to_string(max_attempts) +
                           " attempts at density " + std::to_string(density) +
                           "; try another density");
}

namespace {

template <class Accept>
Graph sample_ladder(int n, Rng& rng, int budget, Accept accept) {
  constexpr int rungs = static_cast<int>(std::size(kSampleDensities));
  for (int rung = uniform_int(rng, 0, rungs - 1); ; --rung) {
    for (int attempt = 0; rung == 0 || attempt < budget; ++attempt) {
      Graph g = random_graph(n, kSampleDensities[rung], rng);
      if (accept(g)) return g;
    }
  }
}

}  // namespace

Graph sample_p5_kpe(int n, int p, Rng& rng, int budget) {
  if (n < 1) throw std::invalid_argument("sample_p5_kpe needs n >= 1");
  const GraphClass cls = GraphClass::p5_kpe(p);
  return sample_ladder(n, rng, budget, [&](const Graph& g) { return !class_membership(g, cls); });
}

Graph sample_p5_free(int n, Rng& rng, int budget) {
  if (n < 1) throw std::invalid_argument("sample_p5_free needs n >= 1");
  return sample_ladder(n, rng, budget, [](const Graph& g) { return !find_induced_p5(g); });
}

}  // namespace p5col
