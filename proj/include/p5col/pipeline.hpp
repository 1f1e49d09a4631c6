#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p5col/cliquesep.hpp"
#include "p5col/coloring.hpp"
#include "p5col/detect.hpp"
#include "p5col/graph.hpp"
#include "p5col/limits.hpp"
#include "p5col/modular.hpp"

namespace p5col {

/// Which solver handled a C-block or a prime quotient.
enum class Route {
  O3Matching,     // O3-free C-block, complement matching
  PrimeC5,        // prime quotient isomorphic to C5
  PerfectExact,   // prime quotient, Berge (or trusted), exact weighted solver
  ExactFallback,  // C-block with an independent triple, exact solver
};

const char* to_string(Route route);

struct BlockRoute {
  Route route = Route::ExactFallback;
  VertexSet vertices;  // C-block, or the representatives of a prime node
  int chi = 0;         // (weighted) chromatic number of that block/quotient
  bool berge_checked = false;  // prime routes: quotient verified Berge / C5
};

struct SolveReport {
  GraphClass graph_class;
  int n = 0;
  int chi = 0;
  MultiColoring coloring;
  VertexWeights weights;
  std::variant<CDecompTree, MDTree> tree;
  std::vector<BlockRoute> routes;
  double ms = 0.0;
};

/// Optimal weighted coloring of a graph isomorphic to C5. Colors shared by
/// non-adjacent pairs are maximized (a b-matching on the complement cycle),
/// every remaining demand gets fresh colors. Throws std::invalid_argument if
/// g is not C5.
MultiColoring chi_w_c5(const Graph& g, const VertexWeights& w);

/// Weighted coloring of a {P5, co-P5}-free graph through its modular
/// decomposition. Prime quotients are C5 (dedicated solver) or perfect
/// (checked Berge within limits.berge_n, then solved exactly). Throws
/// ClassViolation for inputs outside the class and CutoffExceeded when a
/// perfect quotient is too heavy for the exact solver.
SolveReport solve_p5_cop5(const Graph& g, const std::optional<VertexWeights>& w = std::nullopt,
                          const Limits& limits = {});

/// Coloring of a {P5, K_p - e}-free graph through its clique-separator
/// decomposition: O3-free C-blocks by complement matching, the others by
/// the exact solver. Throws ClassViolation, CutoffExceeded, or
/// std::invalid_argument for p < 3.
SolveReport solve_p5_kpe(const Graph& g, int p, const Limits& limits = {});

/// Dispatches on the class; weights are only accepted for p5-cop5.
SolveReport solve(const Graph& g, const GraphClass& cls,
                  const std::optional<VertexWeights>& w = std::nullopt,
                  const Limits& limits = {});

}  // namespace p5col
