#include "doctest.h"
#include "oracles.hpp"
#include "p5col/detect.hpp"
#include "p5col/errors.hpp"
#include "support.hpp"

using namespace p5col;
using testing::make;

TEST_SUITE("detect") {

TEST_CASE("P5 / co-P5 / C5 examples") {
  CHECK_FALSE(find_induced_p5(cycle_graph(5)));
  auto w = find_induced_p5(path_graph(6));
  REQUIRE(w);
  CHECK(witness_holds(path_graph(6), *w));
  auto c = find_induced_c5(cycle_graph(5));
  REQUIRE(c);
  CHECK(c->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(find_induced_co_p5(complement(path_graph(5))));
  CHECK_FALSE(find_induced_co_p5(path_graph(5)));
}

TEST_CASE("K_p - e examples") {
  CHECK_FALSE(find_induced_kp_minus_e(complete_graph(4), 4));
  auto w = find_induced_kp_minus_e(complete_minus_edge(4), 4);
  REQUIRE(w);
  CHECK(w->vertices.size() == 4);
  CHECK_FALSE(find_induced_kp_minus_e(cycle_graph(5), 4));
  CHECK(find_induced_kp_minus_e(path_graph(3), 3));
  CHECK_THROWS_AS(find_induced_kp_minus_e(path_graph(3), 2), std::invalid_argument);
}

TEST_CASE("O3 examples") {
  CHECK(is_o3_free(cycle_graph(5)));
  auto t = find_independent_triple(path_graph(5));
  REQUIRE(t);
  CHECK(t->vertices == std::vector<Vertex>{0, 2, 4});
  CHECK(is_o3_free(complete_graph(7)));
}

TEST_CASE("detectors agree with brute force on random graphs") {
  testing::RandomGraphs gen(21);
  const Graph p5 = path_graph(5), c5 = cycle_graph(5), cop5 = complement(path_graph(5));
  const Graph diamond = complete_minus_edge(4), k5e = complete_minus_edge(5);
  for (int i = 0; i < 250; ++i) {
    Graph g = gen.next(1, 9);
    auto check = [&](const std::optional<Witness>& w, const Graph& pattern) {
      CHECK(w.has_value() == bf::contains_induced(g, pattern));
      if (w) CHECK(witness_holds(g, *w));
    };
    check(find_induced_p5(g), p5);
    check(find_induced_co_p5(g), cop5);
    check(find_induced_c5(g), c5);
    check(find_induced_kp_minus_e(g, 4), diamond);
    check(find_induced_kp_minus_e(g, 5), k5e);
    check(find_independent_triple(g), empty_graph(3));
    check(find_induced_cycle(g, 6, false), cycle_graph(6));
    check(find_induced_cycle(g, 7, true), complement(cycle_graph(7)));
  }
}

TEST_CASE("witness_holds rejects wrong witnesses") {
  Graph g = path_graph(6);
  CHECK_FALSE(witness_holds(g, Witness{"P5", {0, 1, 2, 3, 5}}));
  CHECK_FALSE(witness_holds(g, Witness{"P5", {0, 1, 2, 3}}));
  CHECK(witness_holds(g, Witness{"P5", {1, 2, 3, 4, 5}}));
  CHECK(witness_holds(g, Witness{"O3", {0, 2, 4}}));
}

TEST_CASE("Berge examples") {
  auto c5 = is_berge_small(cycle_graph(5));
  CHECK_FALSE(c5.berge);
  REQUIRE(c5.witness);
  CHECK(c5.witness->vertices.size() == 5);
  CHECK(is_berge_small(make(6, {{0, 3}, {0, 4}, {1, 4}, {2, 5}, {1, 5}})).berge);
  CHECK(is_berge_small(join(empty_graph(3), empty_graph(4))).berge);
  auto c7 = is_berge_small(cycle_graph(7));
  CHECK_FALSE(c7.berge);
  CHECK(c7.witness->pattern == "C7");
  auto a7 = is_berge_small(complement(cycle_graph(7)));
  CHECK_FALSE(a7.berge);
  CHECK(a7.witness->pattern == "co-C7");
  CHECK_FALSE(is_berge_small(petersen_graph()).berge);
  CHECK(is_berge_small(complete_graph(6)).berge);
  Limits small;
  small.berge_n = 6;
  CHECK_THROWS_AS(is_berge_small(cycle_graph(7), small), CutoffExceeded);
}

TEST_CASE("Berge agrees with brute-force hole search") {
  testing::RandomGraphs gen(22);
  for (int i = 0; i < 120; ++i) {
    Graph g = gen.next(1, 8);
    bool odd = false;
    for (int k = 5; k <= g.n(); k += 2) {
      odd = odd || bf::contains_induced(g, cycle_graph(k)) ||
            bf::contains_induced(g, complement(cycle_graph(k)));
    }
    auto r = is_berge_small(g);
    CHECK(r.berge == !odd);
    if (r.witness) CHECK(witness_holds(g, *r.witness));
  }
}

TEST_CASE("class membership examples") {
  CHECK_FALSE(class_membership(cycle_graph(5), GraphClass::p5_cop5()));
  auto p5 = class_membership(path_graph(5), GraphClass::p5_cop5());
  REQUIRE(p5);
  CHECK(p5->pattern == "P5");
  auto d = class_membership(complete_minus_edge(4), GraphClass::p5_kpe(4));
  REQUIRE(d);
  CHECK(d->pattern == "K4-e");
  CHECK_THROWS_AS(GraphClass::p5_kpe(2), std::invalid_argument);
  CHECK(GraphClass::p5_kpe(4).name() == "p5-kpe");
}

TEST_CASE("Ramsey witness") {
  CHECK(ramsey_target(9, 2) == 2);
  CHECK(ramsey_target(24, 3) == 2);
  VertexSet a, b;
  for (int i = 0; i < 9; ++i) {
    a.push_back(i);
    b.push_back(9 + i);
  }
  std::vector<Edge> full;
  for (int u : a)
    for (int v : b) full.emplace_back(u, v);
  auto k = bipartite_ramsey_witness(Graph(18, full), a, b, 2);
  CHECK(k.complete);
  CHECK(k.a.size() == 2);
  CHECK(k.b.size() == 2);
  auto e = bipartite_ramsey_witness(empty_graph(18), a, b, 2);
  CHECK_FALSE(e.complete);

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    for (int u : a)
      for (int v : b)
        if (uniform_unit(rng) < 0.5) edges.emplace_back(u, v);
    Graph g(18, edges);
    auto w = bipartite_ramsey_witness(g, a, b, 2);
    REQUIRE(w.a.size() == 2);
    REQUIRE(w.b.size() == 2);
    for (int u : w.a)
      for (int v : w.b) CHECK(g.adjacent(u, v) == w.complete);
  }
  CHECK_THROWS_AS(bipartite_ramsey_witness(complete_graph(18), a, b, 2), std::invalid_argument);
}

}  // TEST_SUITE
