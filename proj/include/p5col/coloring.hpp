#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p5col/graph.hpp"

namespace p5col {

/// Positive integer demand per vertex.
class VertexWeights {
 public:
  VertexWeights() = default;
  /// Throws std::invalid_argument if any weight is below 1.
  explicit VertexWeights(std::vector<int> w);
  static VertexWeights unit(int n) { return VertexWeights(std::vector<int>(n, 1)); }

  int operator[](Vertex v) const { return w_[v]; }
  int size() const { return static_cast<int>(w_.size()); }
  long long total() const;
  std::span<const int> values() const { return w_; }
  bool is_unit() const;

  /// Weights of the listed host vertices, in that order.
  VertexWeights restrict_to(std::span<const Vertex> vertices) const;

  bool operator==(const VertexWeights&) const = default;

 private:
  std::vector<int> w_;
};

/// Proper coloring with colors 1..num_colors; color[v] for every vertex.
struct Coloring {
  int num_colors = 0;
  std::vector<int> color;
};

/// Weighted coloring: colors[v] is a sorted set of colors in 1..num_colors
/// with |colors[v]| = w(v) and disjoint sets on adjacent vertices.
struct MultiColoring {
  int num_colors = 0;
  std::vector<std::vector<int>> colors;
};

/// First violated property (size, range, properness), or nullopt.
std::optional<std::string> coloring_error(const Graph& g, const Coloring& c);
std::optional<std::string> multicoloring_error(const Graph& g,
                                               const VertexWeights& w,
                                               const MultiColoring& c);

/// Number of distinct colors that actually appear.
int colors_used(const Coloring& c);
int colors_used(const MultiColoring& c);

MultiColoring to_multicoloring(const Coloring& c);

/// Color classes, index i holding the vertices of color i+1.
std::vector<VertexSet> color_classes(const Coloring& c);

}  // namespace p5col
