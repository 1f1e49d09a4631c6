#include "p5col/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "p5col/errors.hpp"

namespace p5col {

namespace {

// Greedy sequential coloring of `order` restricted to vertices in it; used
// for clique bounds. color[i] is the color of order[i], colors from 1.
std::vector<int> greedy_bound_colors(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> color(order.size(), 0);
  std::vector<VertexSet> classes;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      bool clash = false;
      for (Vertex u : classes[c]) {
        if (g.adjacent(u, v)) {
          clash = true;
          break;
        }
      }
      if (!clash) break;
    }
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
    color[i] = static_cast<int>(c) + 1;
  }
  return color;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    std::vector<Vertex> p(g_.n());
    for (Vertex v = 0; v < g_.n(); ++v) p[v] = v;
    std::stable_sort(p.begin(), p.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    expand(p);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<Vertex> p) {
    // Order p by greedy color so the last vertex carries the largest bound.
    std::vector<int> color = greedy_bound_colors(g_, p);
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<Vertex> order;
    std::vector<int> bound;
    for (std::size_t i : idx) {
      order.push_back(p[i]);
      bound.push_back(color[i]);
    }
    while (!order.empty()) {
      if (current_.size() + bound.back() <= best_.size()) return;
      const Vertex v = order.back();
      order.pop_back();
      bound.pop_back();
      current_.push_back(v);
      std::vector<Vertex> next;
      for (Vertex u : order) {
        if (g_.adjacent(u, v)) next.push_back(u);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  VertexSet current_;
  VertexSet best_;
};

class ExactColorer {
 public:
  explicit ExactColorer(const Graph& g)
      : g_(g), n_(g.n()), color_(g.n(), 0), sat_(g.n(), 0),
        seen_(static_cast<std::size_t>(g.n()) * (g.n() + 2), 0) {}

  Coloring run() {
    if (n_ == 0) return {};
    VertexSet clique = detail::max_clique(g_);
    lower_ = static_cast<int>(clique.size());
    Coloring greedy = dsatur_greedy(g_);
    best_ = greedy;
    if (best_.num_colors == lower_) return best_;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i) + 1);
    search(lower_, lower_);
    return best_;
  }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * (n_ + 2) + c]; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (seen(w, c)++ == 0) ++sat_[w];
    }
  }

  void unassign(Vertex v, int c) {
    color_[v] = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (--seen(w, c) == 0) --sat_[w];
    }
  }

  void search(int colored, int used) {
    if (best_.num_colors == lower_) return;
    if (colored == n_) {
      best_.num_colors = used;
      best_.color = color_;
      return;
    }
    Vertex pick = -1;
    int pick_free = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      int free_deg = 0;
      for (Vertex w : g_.neighbors(v)) free_deg += color_[w] == 0;
      if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && free_deg > pick_free)) {
        pick = v;
        pick_free = free_deg;
      }
    }
    const int limit = std::min(used + 1, best_.num_colors - 1);
    for (int c = 1; c <= limit; ++c) {
      if (seen(pick, c) != 0) continue;
      assign(pick, c);
      search(colored + 1, std::max(used, c));
      unassign(pick, c);
      if (best_.num_colors == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<int> seen_;  // seen(v, c): neighbors of v colored c
  int lower_ = 0;
  Coloring best_;
};

}  // namespace

Coloring dsatur_greedy(const Graph& g) {
  const int n = g.n();
  Coloring c;
  c.color.assign(n, 0);
  std::vector<std::vector<char>> neighbor_colors(n, std::vector<char>(n + 2, 0));
  std::vector<int> sat(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (c.color[v] != 0) continue;
      if (pick < 0 || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    int col = 1;
    while (neighbor_colors[pick][col]) ++col;
    c.color[pick] = col;
    c.num_colors = std::max(c.num_colors, col);
    for (Vertex w : g.neighbors(pick)) {
      if (!neighbor_colors[w][col]) {
        neighbor_colors[w][col] = 1;
        ++sat[w];
      }
    }
  }
  return c;
}

namespace detail {

Coloring exact_coloring(const Graph& g) { return ExactColorer(g).run(); }

VertexSet max_clique(const Graph& g) { return CliqueSearch(g).run(); }

}  // namespace detail

Coloring chi_exact(const Graph& g, const Limits& limits) {
  if (g.n() > limits.oracle_n) {
    throw CutoffExceeded("exact chromatic number", g.n(), limits.oracle_n);
  }
  return detail::exact_coloring(g);
}

MultiColoring chi_w_exact(const Graph& g, const VertexWeights& w, const Limits& limits) {
  if (w.size() != g.n()) throw std::invalid_argument("weights do not match the graph");
  if (w.total() > limits.weight_sum) {
    throw CutoffExceeded("exact weighted chromatic number", w.total(), limits.weight_sum);
  }
  std::vector<int> first(g.n() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) first[v + 1] = first[v] + w[v];
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int i = first[v]; i < first[v + 1]; ++i) {
      for (int j = i + 1; j < first[v + 1]; ++j) edges.emplace_back(i, j);
    }
  }
  for (auto [u, v] : g.edges()) {
    for (int i = first[u]; i < first[u + 1]; ++i) {
      for (int j = first[v]; j < first[v + 1]; ++j) edges.emplace_back(i, j);
    }
  }
  Coloring blown = detail::exact_coloring(Graph(first[g.n()], edges));
  MultiColoring out;
  out.num_colors = blown.num_colors;
  out.colors.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int i = first[v]; i < first[v + 1]; ++i) out.colors[v].push_back(blown.color[i]);
    std::sort(out.colors[v].begin(), out.colors[v].end());
  }
  return out;
}

VertexSet max_clique_exact(const Graph& g, const Limits& limits) {
  if (g.n() > limits.oracle_n) {
    throw CutoffExceeded("exact clique number", g.n(), limits.oracle_n);
  }
  return detail::max_clique(g);
}

int clique_number_exact(const Graph& g, const Limits& limits) {
  return static_cast<int>(max_clique_exact(g, limits).size());
}

VertexSet max_independent_set_exact(const Graph& g, const Limits& limits) {
  return max_clique_exact(complement(g), limits);
}

int independence_number_exact(const Graph& g, const Limits& limits) {
  return static_cast<int>(max_independent_set_exact(g, limits).size());
}

int max_matching_bruteforce(const Graph& g, const Limits& limits) {
  if (g.n() > limits.matching_brute_n) {
    throw CutoffExceeded("brute-force matching", g.n(), limits.matching_brute_n);
  }
  const int n = g.n();
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1U << v;
    nbr[v] |= 1U << u;
  }
  std::vector<int> memo(std::size_t{1} << n, -1);
  // best(mask): maximum matching using only vertices in mask
  auto best = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1U << v);
    int result = self(self, rest);
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int u = __builtin_ctz(cand);
      result = std::max(result, 1 + self(self, rest & ~(1U << u)));
    }
    return slot = result;
  };
  return best(best, n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

}  // namespace p5col
