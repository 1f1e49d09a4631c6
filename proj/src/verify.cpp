#include "p5col/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "p5col/cliquesep.hpp"
#include "p5col/coloring.hpp"
#include "p5col/errors.hpp"
#include "p5col/generate.hpp"
#include "p5col/isomorphism.hpp"
#include "p5col/modular.hpp"
#include "p5col/oracle.hpp"
#include "p5col/pipeline.hpp"

namespace p5col {

Lemma5Report verify_lemma5(int n_max, const Limits& limits) {
  if (n_max > limits.berge_n) {
    throw CutoffExceeded("class enumeration", n_max, limits.berge_n);
  }
  Lemma5Report report;
  const Graph c5 = cycle_graph(5);
  auto levels = enumerate_class_members(n_max, GraphClass::p5_cop5());
  for (int n = 1; n <= n_max; ++n) {
    Lemma5Level level;
    level.n = n;
    for (const Graph& g : levels[n]) {
      ++level.members;
      if (!is_connected(g) || !is_prime(g)) continue;
      ++level.prime_connected;
      if (is_berge_small(g, limits).berge) {
        ++level.berge;
      } else if (are_isomorphic(g, c5)) {
        ++level.c5;
      } else {
        ++level.counterexamples;
        report.counterexamples.push_back(g);
      }
    }
    report.levels.push_back(level);
  }
  return report;
}

long long lemma4_clique_bound(int p) {
  constexpr long long kMax = std::numeric_limits<long long>::max();
  long long value = p - 2;
  for (int i = 0; i < p + 2; ++i) {
    if (value > kMax / (p + 1)) return kMax;
    value *= p + 1;
  }
  return value;
}

Lemma4Report verify_lemma4(int p, int samples, int n_max, std::uint64_t seed,
                           const Limits& limits) {
  Lemma4Report report;
  report.p = p;
  report.bound = lemma4_clique_bound(p);
  Rng rng(seed);
  while (report.blocks < samples) {
    const int n = uniform_int(rng, 3, std::max(3, n_max));
    Graph g = sample_p5_kpe(n, p, rng);
    ++report.graphs;
    CDecompTree tree = build_cdecomp_tree(g);
    for (int leaf : tree.leaves()) {
      Graph block = induced(g, tree.nodes[leaf].vertices).graph;
      ++report.blocks;
      ++report.block_sizes[block.n()];
      if (is_o3_free(block)) {
        ++report.o3_free;
      } else if (clique_number_exact(block, limits) <= report.bound) {
        ++report.bounded_only;
      } else {
        ++report.violations;
      }
    }
  }
  return report;
}

GyarfasReport verify_gyarfas(int samples, int n_max, std::uint64_t seed, const Limits& limits) {
  GyarfasReport report;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int n = uniform_int(rng, 1, std::max(1, n_max));
    Graph g;
    switch (i % 3) {
      case 0:
        g = sample_p5_free(n, rng);
        break;
      case 1:
        g = gen_p5_cop5(n, rng());
        break;
      default:
        g = sample_p5_kpe(n, uniform_int(rng, 4, 5), rng);
        break;
    }
    const int chi = chi_exact(g, limits).num_colors;
    const int omega = clique_number_exact(g, limits);
    long long bound = 1;
    for (int k = 1; k < omega; ++k) bound *= 4;
    ++report.samples;
    auto& slot = report.max_chi_by_omega[omega];
    slot = std::max(slot, chi);
    if (chi > bound) ++report.violations;
  }
  return report;
}

CrossCheckReport cross_check_pipeline(const GraphClass& cls, int samples, int n_max,
                                      std::uint64_t seed, bool weighted, const Limits& limits) {
  CrossCheckReport report;
  report.graph_class = cls.describe();
  report.weighted = weighted;
  if (weighted && cls.kind != GraphClass::Kind::P5CoP5) {
    throw std::invalid_argument("weighted cross-check needs the p5-cop5 class");
  }
  Rng rng(seed);
  auto fail = [&](const std::string& what, const Graph& g) {
    if (report.failures.size() < 5) {
      std::ostringstream out;
      out << what << " on n=" << g.n() << " edges:";
      for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
      report.failures.push_back(out.str());
    }
  };
  for (int i = 0; i < samples; ++i) {
    const int n = uniform_int(rng, 1, std::max(1, n_max));
    Graph g = cls.kind == GraphClass::Kind::P5CoP5
                  ? gen_p5_cop5(n, rng())
                  : sample_p5_kpe(n, cls.p, rng);
    std::optional<VertexWeights> w;
    if (weighted) {
      std::vector<int> values(n);
      for (int& x : values) x = uniform_int(rng, 1, 3);
      w = VertexWeights(values);
    }
    ++report.samples;
    ++report.sizes[n];
    SolveReport r = solve(g, cls, w, limits);
    const int expected = weighted ? chi_w_exact(g, *w, limits).num_colors
                                  : chi_exact(g, limits).num_colors;
    if (r.chi != expected) {
      ++report.mismatches;
      fail("chi " + std::to_string(r.chi) + " != oracle " + std::to_string(expected), g);
    }
    if (multicoloring_error(g, r.weights, r.coloring) || colors_used(r.coloring) != r.chi) {
      ++report.invalid_colorings;
      fail("invalid coloring", g);
    }
    if (auto* t = std::get_if<CDecompTree>(&r.tree)) {
      if (auto err = cdecomp_error(g, *t)) {
        ++report.tree_errors;
        fail("clique-separator tree: " + *err, g);
      }
    } else if (auto* m = std::get_if<MDTree>(&r.tree); m && g.n() > 0) {
      if (auto err = md_tree_error(g, *m)) {
        ++report.tree_errors;
        fail("modular tree: " + *err, g);
      }
    }
    for (const auto& route : r.routes) {
      ++report.routes[to_string(route.route)];
      bool sound = true;
      if (route.route == Route::O3Matching) {
        sound = is_o3_free(induced(g, route.vertices).graph);
      } else if (route.route == Route::PrimeC5) {
        sound = are_isomorphic(induced(g, route.vertices).graph, cycle_graph(5));
      }
      if (!sound) {
        ++report.route_errors;
        fail(std::string("unsound route ") + to_string(route.route), g);
      }
    }
  }
  return report;
}

}  // namespace p5col
