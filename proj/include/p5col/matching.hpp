#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p5col/coloring.hpp"
#include "p5col/graph.hpp"

namespace p5col {

/// Set of vertex-disjoint edges, each stored as (u, v) with u < v, sorted.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Nullopt if m is a matching of g.
std::optional<std::string> matching_error(const Graph& g, const Matching& m);

/// Maximum-cardinality matching by Edmonds' blossom algorithm: one
/// augmenting-path search (with blossom contraction) from each exposed
/// vertex in increasing id order. O(n^3).
Matching max_matching(const Graph& g);

/// Optimal coloring of an O3-free graph: each edge of a maximum matching of
/// the complement becomes a two-vertex color class, every unmatched vertex
/// a singleton class, so chi = n - nu(complement). Throws
/// std::invalid_argument naming an independent triple if g is not O3-free.
Coloring chi_o3_free(const Graph& g);

}  // namespace p5col
