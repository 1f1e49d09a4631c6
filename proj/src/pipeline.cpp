#include "p5col/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "p5col/errors.hpp"
#include "p5col/matching.hpp"
#include "p5col/oracle.hpp"

namespace p5col {

const char* to_string(Route route) {
  switch (route) {
    case Route::O3Matching: return "o3-matching";
    case Route::PrimeC5: return "prime-C5";
    case Route::PerfectExact: return "perfect-exact";
    case Route::ExactFallback: return "exact-fallback";
  }
  return "?";
}

namespace {

std::optional<std::vector<Vertex>> c5_order(const Graph& g) {
  if (g.n() != 5 || g.m() != 5) return std::nullopt;
  auto w = find_induced_c5(g);
  if (!w) return std::nullopt;
  return w->vertices;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

MultiColoring chi_w_c5(const Graph& g, const VertexWeights& w) {
  auto order = c5_order(g);
  if (!order) throw std::invalid_argument("graph is not isomorphic to C5");
  if (w.size() != 5) throw std::invalid_argument("weights do not match the graph");
  long long wt[5];
  for (int i = 0; i < 5; ++i) wt[i] = w[(*order)[i]];

  // Pair j = {j, j+2} in cycle positions. Its edges in the complement cycle
  // 0-2-4-1-3-0 are taken in that order: pair 0 is enumerated, the path
  // 2-4-1-3-0 that remains is filled greedily from its end at position 2.
  static constexpr int kPathPairs[] = {2, 4, 1, 3};
  long long best_total = -1;
  long long best_x[5] = {};
  for (long long x0 = 0; x0 <= std::min(wt[0], wt[2]); ++x0) {
    long long cap[5];
    std::copy(wt, wt + 5, cap);
    long long x[5] = {x0, 0, 0, 0, 0};
    cap[0] -= x0;
    cap[2] -= x0;
    for (int j : kPathPairs) {
      const int a = j;
      const int b = (j + 2) % 5;
      x[j] = std::min(cap[a], cap[b]);
      cap[a] -= x[j];
      cap[b] -= x[j];
    }
    const long long total = x[0] + x[1] + x[2] + x[3] + x[4];
    if (total > best_total) {
      best_total = total;
      std::copy(x, x + 5, best_x);
    }
  }

  MultiColoring out;
  out.colors.resize(5);
  int next = 1;
  for (int j = 0; j < 5; ++j) {
    for (long long c = 0; c < best_x[j]; ++c, ++next) {
      out.colors[(*order)[j]].push_back(next);
      out.colors[(*order)[(j + 2) % 5]].push_back(next);
    }
  }
  for (int i = 0; i < 5; ++i) {
    auto& set = out.colors[(*order)[i]];
    while (static_cast<int>(set.size()) < wt[i]) set.push_back(next++);
    std::sort(set.begin(), set.end());
  }
  out.num_colors = next - 1;
  return out;
}

SolveReport solve_p5_cop5(const Graph& g, const std::optional<VertexWeights>& w,
                          const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const GraphClass cls = GraphClass::p5_cop5();
  if (auto witness = class_membership(g, cls)) throw ClassViolation(cls, *witness);

  SolveReport report;
  report.graph_class = cls;
  report.n = g.n();
  report.weights = w ? *w : VertexWeights::unit(g.n());
  if (report.weights.size() != g.n()) {
    throw std::invalid_argument("weights do not match the graph");
  }
  if (g.n() == 0) {
    report.coloring.colors.clear();
    report.tree = MDTree{};
    report.ms = elapsed_ms(start);
    return report;
  }

  MDTree tree = md_tree(g);
  auto solve_prime = [&](const Graph& q, const VertexWeights& qw, const MDNode& node) {
    BlockRoute route;
    route.vertices = node.representatives;
    MultiColoring qc;
    if (c5_order(q)) {
      route.route = Route::PrimeC5;
      route.berge_checked = true;
      qc = chi_w_c5(q, qw);
    } else {
      route.route = Route::PerfectExact;
      if (q.n() <= limits.berge_n) {
        BergeResult berge = is_berge_small(q, limits);
        if (!berge.berge) {
          throw std::logic_error("prime quotient of a {P5, co-P5}-free graph is neither C5 "
                                 "nor Berge (found " + berge.witness->pattern + ")");
        }
        route.berge_checked = true;
      }
      try {
        qc = chi_w_exact(q, qw, limits);
      } catch (const CutoffExceeded& e) {
        throw CutoffExceeded("prime quotient on " + std::to_string(q.n()) +
                                 " vertices: exact weighted chromatic number",
                             e.size(), e.limit());
      }
    }
    route.chi = qc.num_colors;
    report.routes.push_back(std::move(route));
    return qc;
  };
  report.coloring = chi_w(g, tree, report.weights, solve_prime);
  report.chi = report.coloring.num_colors;
  report.tree = std::move(tree);
  report.ms = elapsed_ms(start);
  return report;
}

SolveReport solve_p5_kpe(const Graph& g, int p, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const GraphClass cls = GraphClass::p5_kpe(p);
  if (auto witness = class_membership(g, cls)) throw ClassViolation(cls, *witness);

  SolveReport report;
  report.graph_class = cls;
  report.n = g.n();
  report.weights = VertexWeights::unit(g.n());

  CDecompTree tree = build_cdecomp_tree(g);
  auto solve_leaf = [&](const Graph& block, std::span<const Vertex> host) {
    BlockRoute route;
    route.vertices.assign(host.begin(), host.end());
    Coloring c;
    if (is_o3_free(block)) {
      route.route = Route::O3Matching;
      c = chi_o3_free(block);
    } else {
      route.route = Route::ExactFallback;
      if (block.n() > limits.oracle_n) {
        const int omega = static_cast<int>(detail::max_clique(block).size());
        throw CutoffExceeded("C-block on " + std::to_string(block.n()) +
                                 " vertices with omega " + std::to_string(omega) +
                                 " is not O3-free: exact chromatic number",
                             block.n(), limits.oracle_n);
      }
      c = chi_exact(block, limits);
    }
    route.chi = c.num_colors;
    report.routes.push_back(std::move(route));
    return c;
  };
  Coloring c = chi_compose(g, tree, solve_leaf);
  report.chi = c.num_colors;
  report.coloring = to_multicoloring(c);
  report.tree = std::move(tree);
  report.ms = elapsed_ms(start);
  return report;
}

SolveReport solve(const Graph& g, const GraphClass& cls, const std::optional<VertexWeights>& w,
                  const Limits& limits) {
  if (cls.kind == GraphClass::Kind::P5CoP5) return solve_p5_cop5(g, w, limits);
  if (w && !w->is_unit()) {
    throw std::invalid_argument("vertex weights are only supported for the p5-cop5 class");
  }
  return solve_p5_kpe(g, cls.p, limits);
}

}  // namespace p5col
