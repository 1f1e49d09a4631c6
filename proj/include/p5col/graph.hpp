#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace p5col {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as bitset rows for O(1) tests and as sorted
/// neighbor lists for iteration.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges collapse. Throws std::invalid_argument on self-loops or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Bitset row of v: bit u of word u/64 is set iff u is a neighbor.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  int words() const { return words_; }

  /// All edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph together with the map from its local ids to host ids.
struct Induced {
  Graph graph;
  std::vector<Vertex> to_host;
};

Graph complement(const Graph& g);

/// Subgraph induced by `s`. Local vertex i corresponds to s[i], so the
/// order of `s` is preserved. Throws std::invalid_argument on out-of-range
/// or repeated vertices.
Induced induced(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the complement, computed without materializing it.
std::vector<VertexSet> co_components(const Graph& g);

bool is_connected(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_independent(const Graph& g, std::span<const Vertex> s);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Small named graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_p minus the edge {0, 1}.
Graph complete_minus_edge(int p);
Graph petersen_graph();
/// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

}  // namespace p5col
