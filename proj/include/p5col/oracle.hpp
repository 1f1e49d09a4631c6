#pragma once

#include "p5col/coloring.hpp"
#include "p5col/graph.hpp"
#include "p5col/limits.hpp"

namespace p5col {

/// DSATUR greedy coloring; an upper bound, not necessarily optimal.
Coloring dsatur_greedy(const Graph& g);

/// Exact chromatic number by branch and bound: a maximum clique is
/// precolored as the lower bound, DSATUR gives the first incumbent, and the
/// search branches on the most saturated vertex. Throws CutoffExceeded when
/// g.n() > limits.oracle_n.
Coloring chi_exact(const Graph& g, const Limits& limits = {});

/// Exact weighted chromatic number: every vertex v is blown up into a
/// clique of w(v) copies (copies of adjacent vertices fully joined) and the
/// blow-up is colored exactly. Throws CutoffExceeded when the weight sum
/// exceeds limits.weight_sum.
MultiColoring chi_w_exact(const Graph& g, const VertexWeights& w, const Limits& limits = {});

/// Maximum clique by branch and bound with greedy-coloring bounds, sorted.
/// Throws CutoffExceeded when g.n() > limits.oracle_n.
VertexSet max_clique_exact(const Graph& g, const Limits& limits = {});
int clique_number_exact(const Graph& g, const Limits& limits = {});

VertexSet max_independent_set_exact(const Graph& g, const Limits& limits = {});
int independence_number_exact(const Graph& g, const Limits& limits = {});

/// Maximum matching size by memoized exhaustive search over vertex subsets.
/// Throws CutoffExceeded when g.n() > limits.matching_brute_n.
int max_matching_bruteforce(const Graph& g, const Limits& limits = {});

namespace detail {
// Unchecked solvers behind the public entry points.
Coloring exact_coloring(const Graph& g);
VertexSet max_clique(const Graph& g);
}  // namespace detail

}  // namespace p5col
