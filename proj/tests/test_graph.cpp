#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "p5col/coloring.hpp"
#include "p5col/errors.hpp"
#include "p5col/graph_io.hpp"
#include "p5col/isomorphism.hpp"
#include "support.hpp"

using namespace p5col;
using testing::make;

TEST_SUITE("graph") {

TEST_CASE("construction rejects self-loops and bad ids, collapses duplicates") {
  CHECK_THROWS_AS(make(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make(3, {{-1, 2}}), std::invalid_argument);
  Graph g = make(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.m() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(2) == 0);
}

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  testing::RandomGraphs gen(11);
  for (int i = 0; i < 50; ++i) {
    Graph g = gen.next(0, 12);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).m() + g.m() == g.n() * (g.n() - 1) / 2);
  }
}

TEST_CASE("induced subgraphs") {
  std::vector<Vertex> three{1, 2, 3};
  Induced s = induced(cycle_graph(5), three);
  CHECK(s.graph == path_graph(3));
  CHECK(s.to_host == three);
  Graph g = petersen_graph();
  std::vector<Vertex> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(induced(g, all).graph == g);
  std::vector<Vertex> universal{2, 3};
  CHECK(induced(complete_minus_edge(4), universal).graph == complete_graph(2));
}

TEST_CASE("components and co-components") {
  CHECK(components(empty_graph(3)).size() == 3);
  auto parts = components(disjoint_union(complete_graph(3), complete_graph(2)));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 2);
  CHECK(components(petersen_graph()).size() == 1);
  CHECK(components(Graph(0)).empty());
  testing::RandomGraphs gen(12);
  for (int i = 0; i < 60; ++i) {
    Graph g = gen.next(1, 12);
    CHECK(co_components(g) == components(complement(g)));
    CHECK(is_connected(g) == (components(g).size() == 1));
  }
}

TEST_CASE("is_clique and is_independent") {
  Graph d = complete_minus_edge(4);
  std::vector<Vertex> universal{2, 3}, missing{0, 1}, none{};
  CHECK(is_clique(d, universal));
  CHECK_FALSE(is_clique(d, missing));
  CHECK(is_clique(d, none));
  CHECK(is_independent(d, missing));
  CHECK(is_independent(d, none));
}

TEST_CASE("factories") {
  CHECK(complete_minus_edge(4).m() == 5);
  CHECK_FALSE(complete_minus_edge(4).adjacent(0, 1));
  CHECK(petersen_graph().m() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
  CHECK(join(empty_graph(2), empty_graph(2)) == make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(bf::isomorphic(cycle_graph(4), join(empty_graph(2), empty_graph(2))));
}

TEST_CASE("relabel preserves isomorphism type") {
  testing::RandomGraphs gen(13);
  for (int i = 0; i < 30; ++i) {
    Graph g = gen.next(1, 7);
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.rng);
    Graph h = relabel(g, perm);
    CHECK(bf::isomorphic(g, h));
    CHECK(are_isomorphic(g, h));
  }
}

TEST_CASE("isomorphism agrees with brute force") {
  testing::RandomGraphs gen(14);
  for (int i = 0; i < 200; ++i) {
    Graph g = gen.next(1, 6), h = gen.next(g.n(), g.n());
    auto map = find_isomorphism(g, h);
    CHECK(map.has_value() == bf::isomorphic(g, h));
    if (map) CHECK(relabel(g, *map) == h);
    if (bf::isomorphic(g, h)) CHECK(invariant_hash(g) == invariant_hash(h));
  }
}

}  // TEST_SUITE

TEST_SUITE("graph_io") {

TEST_CASE("DIMACS examples") {
  CHECK(parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs) == path_graph(3));
  Graph one = parse_graph("p edge 1 0\n", GraphFormat::Dimacs);
  CHECK(one.n() == 1);
  CHECK(one.m() == 0);
  CHECK(parse_graph("c comment\np col 2 1\ne 1 2\n", GraphFormat::Dimacs) == complete_graph(2));
}

TEST_CASE("edge-list examples") {
  CHECK(parse_graph("0 1\n1 2\n2 0\n", GraphFormat::EdgeList) == complete_graph(3));
  CHECK(parse_graph("# n 4\n0 1\n", GraphFormat::EdgeList).n() == 4);
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](std::string text, GraphFormat f) {
    try {
      parse_graph(text, f);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs) == 2);
  CHECK(line_of("p edge 3 2\ne 1 2\ne 2 2\n", GraphFormat::Dimacs) == 3);
  CHECK(line_of("e 1 2\n", GraphFormat::Dimacs) == 1);
  CHECK(line_of("p edge x 2\n", GraphFormat::Dimacs) == 1);
  CHECK(line_of("0 1\n1 1\n", GraphFormat::EdgeList) == 2);
  CHECK(line_of("0 1\nfoo\n", GraphFormat::EdgeList) == 2);
  CHECK(line_of("", GraphFormat::Dimacs) > -1);
}

TEST_CASE("writers round-trip") {
  testing::RandomGraphs gen(15);
  for (int i = 0; i < 40; ++i) {
    Graph g = gen.next(1, 14);
    for (auto f : {GraphFormat::Dimacs, GraphFormat::EdgeList}) {
      CHECK(parse_graph(format_graph(g, f), f) == g);
    }
  }
}

TEST_CASE("format names and extensions") {
  CHECK(parse_format_name("dimacs") == GraphFormat::Dimacs);
  CHECK(parse_format_name("edges") == GraphFormat::EdgeList);
  CHECK(format_from_path("a/b.col") == GraphFormat::Dimacs);
  CHECK(format_from_path("x.txt") == GraphFormat::EdgeList);
}

TEST_CASE("weights files") {
  std::istringstream in("0 3\n2 2\n");
  VertexWeights w = parse_weights(in, 3);
  CHECK(w[0] == 3);
  CHECK(w[1] == 1);
  CHECK(w[2] == 2);
  CHECK(w.total() == 6);
  std::istringstream bad("0 0\n");
  CHECK_THROWS_AS(parse_weights(bad, 3), ParseError);
  std::istringstream range("5 1\n");
  CHECK_THROWS_AS(parse_weights(range, 3), ParseError);
}

}  // TEST_SUITE
