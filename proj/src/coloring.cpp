#include "p5col/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace p5col {

VertexWeights::VertexWeights(std::vector<int> w) : w_(std::move(w)) {
  for (std::size_t v = 0; v < w_.size(); ++v) {
    if (w_[v] < 1) {
      throw std::invalid_argument("weight of vertex " + std::to_string(v) +
                                  " must be positive");
    }
  }
}

long long VertexWeights::total() const {
  return std::accumulate(w_.begin(), w_.end(), 0LL);
}

bool VertexWeights::is_unit() const {
  return std::all_of(w_.begin(), w_.end(), [](int x) { return x == 1; });
}

VertexWeights VertexWeights::restrict_to(std::span<const Vertex> vertices) const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(w_.at(v));
  return VertexWeights(std::move(out));
}

std::optional<std::string> coloring_error(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.n()) {
    return "coloring covers " + std::to_string(c.color.size()) +
           " vertices, graph has " + std::to_string(g.n());
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c.color[v] < 1 || c.color[v] > c.num_colors) {
      return "vertex " + std::to_string(v) + " has color " +
             std::to_string(c.color[v]) + " outside 1.." +
             std::to_string(c.num_colors);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (c.color[u] == c.color[v]) {
      return "adjacent vertices " + std::to_string(u) + " and " +
             std::to_string(v) + " share color " + std::to_string(c.color[u]);
    }
  }
  return std::nullopt;
}

std::optional<std::string> multicoloring_error(const Graph& g,
                                               const VertexWeights& w,
                                               const MultiColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.n() || w.size() != g.n()) {
    return std::string("coloring or weights do not match the vertex count");
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& set = c.colors[v];
    if (static_cast<int>(set.size()) != w[v]) {
      return "vertex " + std::to_string(v) + " has " +
             std::to_string(set.size()) + " colors, weight is " +
             std::to_string(w[v]);
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > c.num_colors) {
        return "vertex " + std::to_string(v) + " has color " +
               std::to_string(set[i]) + " outside 1.." +
               std::to_string(c.num_colors);
      }
      if (i > 0 && set[i - 1] >= set[i]) {
        return "color set of vertex " + std::to_string(v) +
               " is not strictly increasing";
      }
    }
  }
  std::vector<int> shared;
  for (auto [u, v] : g.edges()) {
    shared.clear();
    std::set_intersection(c.colors[u].begin(), c.colors[u].end(),
                          c.colors[v].begin(), c.colors[v].end(),
                          std::back_inserter(shared));
    if (!shared.empty()) {
      return "adjacent vertices " + std::to_string(u) + " and " +
             std::to_string(v) + " share color " + std::to_string(shared[0]);
    }
  }
  return std::nullopt;
}

int colors_used(const Coloring& c) {
  std::vector<int> all = c.color;
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

int colors_used(const MultiColoring& c) {
  std::vector<int> all;
  for (const auto& s : c.colors) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

MultiColoring to_multicoloring(const Coloring& c) {
  MultiColoring out;
  out.num_colors = c.num_colors;
  out.colors.reserve(c.color.size());
  for (int col : c.color) out.colors.push_back({col});
  return out;
}

std::vector<VertexSet> color_classes(const Coloring& c) {
  std::vector<VertexSet> classes(c.num_colors);
  for (std::size_t v = 0; v < c.color.size(); ++v) {
    classes.at(c.color[v] - 1).push_back(static_cast<Vertex>(v));
  }
  return classes;
}

}  // namespace p5col
