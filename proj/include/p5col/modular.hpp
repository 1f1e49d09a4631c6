#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p5col/coloring.hpp"
#include "p5col/graph.hpp"

namespace p5col {

/// Every vertex outside m sees all of m or none of it.
bool is_module(const Graph& g, std::span<const Vertex> m);

/// No module other than singletons and V(g).
bool is_prime(const Graph& g);

/// Smallest module of g containing `seed` (nonempty).
VertexSet module_closure(const Graph& g, std::span<const Vertex> seed);

/// Maximal proper modules of a graph that is connected, co-connected and has
/// at least two vertices; they partition V(g). Sorted by smallest member.
std::vector<VertexSet> maximal_modules(const Graph& g);

struct Quotient {
  Graph graph;                       // vertex i stands for parts[i]
  std::vector<Vertex> representatives;  // smallest id of each part
};

/// Throws std::invalid_argument unless `parts` partition V(g) into modules.
Quotient quotient(const Graph& g, const std::vector<VertexSet>& parts);

enum class MDKind { Vertex, Parallel, Series, Prime };

const char* to_string(MDKind kind);

struct MDNode {
  MDKind kind = MDKind::Vertex;
  VertexSet vertices;           // host ids spanned by this node
  std::vector<int> children;    // node indices, ordered by smallest vertex
  // Prime nodes only: quotient vertex i is child i, represented by
  // representatives[i].
  Graph quotient;
  std::vector<Vertex> representatives;
};

struct MDTree {
  std::vector<MDNode> nodes;
  int root = -1;
};

/// Modular decomposition following Gallai's trichotomy: Parallel over the
/// components, Series over the co-components, otherwise Prime over the
/// maximal modules. Throws std::invalid_argument for the empty graph.
MDTree md_tree(const Graph& g);

/// First broken structural invariant, or nullopt.
std::optional<std::string> md_tree_error(const Graph& g, const MDTree& t);

/// Weighted coloring of the quotient of a Prime node; must be optimal.
/// `node` is the Prime node being solved (node.quotient == quotient).
using PrimeSolver = std::function<MultiColoring(
    const Graph& quotient, const VertexWeights& weights, const MDNode& node)>;

/// Weighted chromatic number with a certificate. Parallel nodes take the
/// maximum over children sharing one palette, Series nodes the sum over
/// disjoint palette segments, and Prime nodes solve the quotient with each
/// vertex weighted by its child's weighted chromatic number, then rename
/// each child's colors into the color set its quotient vertex received.
/// Throws std::logic_error if the prime solver's output does not validate.
MultiColoring chi_w(const Graph& g, const MDTree& t, const VertexWeights& w,
                    const PrimeSolver& solve_prime);
MultiColoring chi_w(const Graph& g, const VertexWeights& w, const PrimeSolver& solve_prime);

}  // namespace p5col
