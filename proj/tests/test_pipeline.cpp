#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "p5col/errors.hpp"
#include "p5col/generate.hpp"
#include "p5col/pipeline.hpp"
#include "support.hpp"

using namespace p5col;
using testing::make;

namespace {

std::vector<Route> routes_of(const SolveReport& r) {
  std::vector<Route> out;
  for (const auto& b : r.routes) out.push_back(b.route);
  return out;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("p5-cop5 examples") {
  SolveReport c5 = solve_p5_cop5(cycle_graph(5));
  CHECK(c5.chi == 3);
  CHECK(routes_of(c5) == std::vector<Route>{Route::PrimeC5});
  SolveReport p4 = solve_p5_cop5(path_graph(4));
  CHECK(p4.chi == 2);
  CHECK(routes_of(p4) == std::vector<Route>{Route::PerfectExact});
  SolveReport cograph = solve_p5_cop5(join(complete_graph(3), empty_graph(2)));
  CHECK(cograph.chi == 4);
  CHECK(cograph.routes.empty());
}

TEST_CASE("p5-kpe examples") {
  for (int n = 1; n <= 7; ++n) {
    for (int p = 3; p <= 5; ++p) {
      SolveReport r = solve_p5_kpe(complete_graph(n), p);
      CHECK(r.chi == n);
      CHECK(routes_of(r) == std::vector<Route>{Route::O3Matching});
    }
  }
  SolveReport c5 = solve_p5_kpe(cycle_graph(5), 4);
  CHECK(c5.chi == 3);
  CHECK(routes_of(c5) == std::vector<Route>{Route::O3Matching});
  SolveReport bow = solve_p5_kpe(testing::bowtie(), 4);
  CHECK(bow.chi == 3);
  CHECK(routes_of(bow) == std::vector<Route>{Route::O3Matching, Route::O3Matching});
  CHECK(std::get<CDecompTree>(bow.tree).nodes.size() == 3);
}

TEST_CASE("inputs outside the class raise ClassViolation with a witness") {
  try {
    solve_p5_cop5(path_graph(5));
    FAIL("no throw");
  } catch (const ClassViolation& e) {
    CHECK(e.witness().pattern == "P5");
    CHECK(witness_holds(path_graph(5), e.witness()));
  }
  CHECK_THROWS_AS(solve_p5_cop5(complement(path_graph(5))), ClassViolation);
  CHECK_THROWS_AS(solve_p5_kpe(complete_minus_edge(4), 4), ClassViolation);
  CHECK_THROWS_AS(solve_p5_kpe(path_graph(6), 5), ClassViolation);
  CHECK_THROWS_AS(solve_p5_kpe(path_graph(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(solve(path_graph(2), GraphClass::p5_kpe(4), VertexWeights({2, 1})),
                  std::invalid_argument);
}

TEST_CASE("p = 3: disjoint unions of cliques") {
  Graph g = disjoint_union(complete_graph(4), complete_graph(2));
  CHECK(solve_p5_kpe(g, 3).chi == 4);
}

TEST_CASE("weighted C5 matches max(adjacent pair, ceil(W/2)) and the DP") {
  Rng rng(71);
  const Graph c5 = cycle_graph(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> w(5);
    for (int& x : w) x = uniform_int(rng, 1, trial < 200 ? 4 : 40);
    VertexWeights vw(w);
    MultiColoring c = chi_w_c5(c5, vw);
    CHECK_FALSE(multicoloring_error(c5, vw, c));
    const int total = std::accumulate(w.begin(), w.end(), 0);
    int pair = 0;
    for (int i = 0; i < 5; ++i) pair = std::max(pair, w[i] + w[(i + 1) % 5]);
    CHECK(c.num_colors == std::max(pair, (total + 1) / 2));
    if (trial < 200) CHECK(c.num_colors == bf::chi_w(c5, w));
  }
  // relabeled C5
  Graph other = make(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  VertexWeights w({3, 1, 2, 2, 1});
  MultiColoring c = chi_w_c5(other, w);
  CHECK_FALSE(multicoloring_error(other, w, c));
  CHECK(c.num_colors == bf::chi_w(other, {3, 1, 2, 2, 1}));
  CHECK_THROWS_AS(chi_w_c5(path_graph(5), VertexWeights::unit(5)), std::invalid_argument);
}

TEST_CASE("weighted C5 substituted into a larger graph") {
  // C5 whose vertices are replaced by a K2, an O2 and singletons
  Graph g = make(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 0},
                     {6, 1}});
  REQUIRE_FALSE(class_membership(g, GraphClass::p5_cop5()));
  SolveReport r = solve_p5_cop5(g, VertexWeights({1, 2, 1, 1, 2, 1, 1}));
  CHECK(r.chi == bf::chi_w(g, {1, 2, 1, 1, 2, 1, 1}));
}

TEST_CASE("generated members: pipeline equals brute force") {
  Rng rng(72);
  for (int i = 0; i < 120; ++i) {
    const int n = uniform_int(rng, 1, 9);
    Graph g = gen_p5_cop5(n, rng());
    SolveReport r = solve_p5_cop5(g);
    CHECK(r.chi == bf::chi(g));
    CHECK_FALSE(multicoloring_error(g, r.weights, r.coloring));
    for (int p : {4, 5}) {
      Graph h = sample_p5_kpe(n, p, rng);
      SolveReport s = solve_p5_kpe(h, p);
      CHECK(s.chi == bf::chi(h));
      CHECK_FALSE(multicoloring_error(h, s.weights, s.coloring));
    }
  }
}

TEST_CASE("weighted generated members equal the demand-vector DP") {
  Rng rng(73);
  for (int i = 0; i < 80; ++i) {
    const int n = uniform_int(rng, 1, 7);
    Graph g = gen_p5_cop5(n, rng());
    std::vector<int> w(n);
    for (int& x : w) x = uniform_int(rng, 1, 3);
    SolveReport r = solve_p5_cop5(g, VertexWeights(w));
    CHECK(r.chi == bf::chi_w(g, w));
    CHECK_FALSE(multicoloring_error(g, VertexWeights(w), r.coloring));
  }
}

TEST_CASE("large weights stay exact through the C5 route") {
  VertexWeights w({30, 25, 40, 10, 35});
  SolveReport r = solve_p5_cop5(cycle_graph(5), w);
  CHECK(r.chi == std::max(65, (140 + 1) / 2));
}

TEST_CASE("oversized blocks raise CutoffExceeded") {
  Limits lim;
  lim.oracle_n = 5;
  // K3,3: one C-block with an independent triple, so it needs the exact solver
  Graph k33 = join(empty_graph(3), empty_graph(3));
  CHECK_THROWS_AS(solve_p5_kpe(k33, 4, lim), CutoffExceeded);
  CHECK(solve_p5_kpe(k33, 4).chi == 2);
  // O3-free blocks never touch the exact solver
  CHECK(solve_p5_kpe(complete_graph(12), 4, lim).chi == 12);
  lim.weight_sum = 5;
  lim.oracle_n = 24;
  CHECK_THROWS_AS(solve_p5_cop5(path_graph(4), VertexWeights({2, 2, 2, 2}), lim), CutoffExceeded);
}

}  // TEST_SUITE
