#pragma once

#include <vector>

#include "p5col/generate.hpp"
#include "p5col/graph.hpp"

namespace testing {

inline p5col::Graph make(int n, std::vector<p5col::Edge> edges) { return p5col::Graph(n, edges); }

inline p5col::Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Fixed-seed random graph stream for property tests.
struct RandomGraphs {
  p5col::Rng rng;
  explicit RandomGraphs(std::uint64_t seed) : rng(seed) {}
  p5col::Graph next(int n_min, int n_max) {
    const int n = p5col::uniform_int(rng, n_min, n_max);
    const double d = p5col::uniform_unit(rng);
    return p5col::random_graph(n, d, rng);
  }
};

}  // namespace testing
