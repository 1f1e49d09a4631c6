#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p5col/coloring.hpp"
#include "p5col/graph.hpp"

namespace p5col {

/// A clique Q with V - Q split into A and B, no edges between A and B.
struct CliqueSeparation {
  VertexSet separator;
  VertexSet a;  // component of g - Q holding the smallest vertex outside Q
  VertexSet b;  // everything else outside Q
};

/// Lexicographically smallest clique separator among the candidates, or
/// nullopt if g has none. A disconnected g yields the empty separator with A
/// the component of vertex 0.
///
/// Candidates are the sets madj(v) of the minimal triangulation computed by
/// MCS-M, which contain every clique minimal separator, together with the
/// separators N(C) for components C of g - N[v].
std::optional<CliqueSeparation> find_clique_separator(const Graph& g);

struct CDecompNode {
  VertexSet vertices;   // host ids spanned by this subtree
  VertexSet separator;  // empty for leaves and for splits of disconnected parts
  int left = -1;
  int right = -1;

  bool is_leaf() const { return left < 0; }
};

/// Binary clique-separator decomposition tree. Node i's children are
/// nodes[left] = G(A + Q) and nodes[right] = G(B + Q); leaves are C-blocks.
struct CDecompTree {
  std::vector<CDecompNode> nodes;
  int root = -1;

  /// Leaf node indices, left to right.
  std::vector<int> leaves() const;
};

CDecompTree build_cdecomp_tree(const Graph& g);

/// First broken structural invariant, or nullopt.
std::optional<std::string> cdecomp_error(const Graph& g, const CDecompTree& t);

/// Colors one C-block. `block` is induced on `host_ids` (local i = host_ids[i]).
using LeafSolver =
    std::function<Coloring(const Graph& block, std::span<const Vertex> host_ids)>;

/// Colors g with max over the leaves of their color counts by merging leaf
/// colorings bottom-up: at each split the side using fewer colors is renamed
/// to agree with the other on the separator, and its remaining colors are
/// mapped onto colors the other side uses outside the separator.
/// Throws std::logic_error if a leaf coloring is invalid.
Coloring chi_compose(const Graph& g, const CDecompTree& t, const LeafSolver& solve_leaf);

}  // namespace p5col
