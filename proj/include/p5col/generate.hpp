#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "p5col/detect.hpp"
#include "p5col/graph.hpp"

namespace p5col {

/// The single random engine type; every random choice derives from a seed.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] (modulo draw, identical on every platform).
int uniform_int(Rng& rng, int lo, int hi);
/// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

/// Erdos-Renyi G(n, density).
Graph random_graph(int n, double density, Rng& rng);

/// Non-isomorphic members of `cls` on exactly k vertices, for k = 0..n_max
/// (result[k]). Built level by level: every member on k vertices is a
/// member on k-1 vertices plus one vertex, since the class is hereditary.
std::vector<std::vector<Graph>> enumerate_class_members(int n_max, const GraphClass& cls);

/// Connected prime {P5, co-P5}-free graphs on 4..7 vertices (P4, C5, the
/// bull, ...), enumerated once and cached.
const std::vector<Graph>& prime_p5_cop5_seeds();

/// Random {P5, co-P5}-free graph on n vertices, built by module
/// substitution: the root is a disjoint union, a join, or a seed prime
/// graph, and each of its vertices is replaced by a recursively generated
/// member. Membership is re-checked before returning.
Graph gen_p5_cop5(int n, std::uint64_t seed);

struct GeneratedGraph {
  Graph graph;
  int attempts = 0;
};

/// Rejection sampling of G(n, density) until the sample is
/// {P5, K_p - e}-free. Throws std::runtime_error after max_attempts.
GeneratedGraph gen_p5_kpe(int n, int p, std::uint64_t seed, double density,
                          int max_attempts = 1'000'000);

/// Density ladder used by the samplers below.
inline constexpr double kSampleDensities[] = {0.1, 0.15, 0.25, 0.35, 0.5, 0.65, 0.8};

/// Picks a density from kSampleDensities and rejection-samples with a
/// budget of `budget` attempts, stepping down the ladder whenever the
/// budget runs out (dense members are rare for n >= 10). The lowest rung
/// has no budget.
Graph sample_p5_kpe(int n, int p, Rng& rng, int budget = 4000);

/// The same ladder for P5-free graphs.
Graph sample_p5_free(int n, Rng& rng, int budget = 4000);

}  // namespace p5col
