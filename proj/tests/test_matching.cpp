#include "doctest.h"
#include "oracles.hpp"
#include "p5col/detect.hpp"
#include "p5col/matching.hpp"
#include "p5col/oracle.hpp"
#include "support.hpp"

using namespace p5col;
using testing::make;

TEST_SUITE("matching") {

TEST_CASE("matching examples") {
  CHECK(max_matching(complete_graph(3)).size() == 1);
  Matching p4 = max_matching(path_graph(4));
  CHECK(p4.size() == 2);
  CHECK_FALSE(matching_error(path_graph(4), p4));
  CHECK(max_matching(petersen_graph()).size() == 5);
  CHECK(max_matching(Graph(0)).size() == 0);
  CHECK(max_matching(empty_graph(4)).size() == 0);
}

TEST_CASE("blossom equals brute force, with odd cycles forcing contractions") {
  testing::RandomGraphs gen(51);
  for (int i = 0; i < 300; ++i) {
    Graph g = gen.next(1, 12);
    Matching m = max_matching(g);
    CHECK_FALSE(matching_error(g, m));
    CHECK(m.size() == bf::matching(g));
  }
  // two triangles joined by a path: augmenting path through a blossom
  Graph t = make(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  CHECK(max_matching(t).size() == bf::matching(t));
}

TEST_CASE("matching_error catches bad matchings") {
  Graph g = path_graph(4);
  CHECK(matching_error(g, Matching{{{0, 2}}}));
  CHECK(matching_error(g, Matching{{{0, 1}, {1, 2}}}));
}

TEST_CASE("chi_o3_free examples") {
  for (int n = 1; n <= 6; ++n) CHECK(chi_o3_free(complete_graph(n)).num_colors == n);
  Coloring c5 = chi_o3_free(cycle_graph(5));
  CHECK(c5.num_colors == 3);
  CHECK_FALSE(coloring_error(cycle_graph(5), c5));
  for (int k = 1; k <= 5; ++k) {
    std::vector<Edge> pm;
    for (int i = 0; i < k; ++i) pm.emplace_back(2 * i, 2 * i + 1);
    Graph g = complement(Graph(2 * k, pm));
    CHECK(chi_o3_free(g).num_colors == k);
  }
}

TEST_CASE("chi_o3_free rejects graphs with an independent triple") {
  CHECK_THROWS_AS(chi_o3_free(path_graph(5)), std::invalid_argument);
}

TEST_CASE("chi_o3_free equals brute-force chi on complements of triangle-free graphs") {
  Rng rng(52);
  int tested = 0;
  while (tested < 120) {
    const int n = uniform_int(rng, 1, 11);
    Graph g = complement(random_graph(n, uniform_unit(rng) * 0.5, rng));
    if (!is_o3_free(g)) continue;
    ++tested;
    Coloring c = chi_o3_free(g);
    CHECK_FALSE(coloring_error(g, c));
    CHECK(c.num_colors == bf::chi(g));
    for (const auto& cls : color_classes(c)) CHECK(cls.size() <= 2);
  }
}

}  // TEST_SUITE
