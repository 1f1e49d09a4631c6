#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "p5col/detect.hpp"
#include "p5col/graph.hpp"
#include "p5col/limits.hpp"

namespace p5col {

struct Lemma5Level {
  int n = 0;
  long long members = 0;          // non-isomorphic {P5, co-P5}-free graphs
  long long prime_connected = 0;
  long long berge = 0;
  long long c5 = 0;               // isomorphic to C5 (and not Berge)
  long long counterexamples = 0;  // neither
};

struct Lemma5Report {
  std::vector<Lemma5Level> levels;  // n = 1..n_max
  std::vector<Graph> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// Enumerates every {P5, co-P5}-free graph up to isomorphism with at most
/// n_max vertices and checks that each connected prime one is Berge or C5.
/// Throws CutoffExceeded when n_max > limits.berge_n.
Lemma5Report verify_lemma5(int n_max, const Limits& limits = {});

/// (p+1)^(p+2) (p-2), saturating at INT64_MAX.
long long lemma4_clique_bound(int p);

struct Lemma4Report {
  int p = 0;
  long long bound = 0;
  int graphs = 0;
  int blocks = 0;
  int o3_free = 0;
  int bounded_only = 0;  // has an independent triple, clique number within bound
  int violations = 0;    // neither side holds
  std::map<int, int> block_sizes;
  bool ok() const { return violations == 0; }
};

/// Collects at least `samples` C-blocks of random {P5, K_p - e}-free graphs
/// with at most n_max vertices and classifies each one as O3-free or of
/// clique number at most lemma4_clique_bound(p).
Lemma4Report verify_lemma4(int p, int samples, int n_max, std::uint64_t seed,
                           const Limits& limits = {});

struct GyarfasReport {
  int samples = 0;
  int violations = 0;
  std::map<int, int> max_chi_by_omega;
  bool ok() const { return violations == 0; }
};

/// chi <= 4^(omega - 1) on random P5-free graphs with at most n_max vertices.
GyarfasReport verify_gyarfas(int samples, int n_max, std::uint64_t seed,
                             const Limits& limits = {});

struct CrossCheckReport {
  std::string graph_class;
  bool weighted = false;
  int samples = 0;
  int mismatches = 0;
  int invalid_colorings = 0;
  int tree_errors = 0;
  int route_errors = 0;
  std::map<std::string, int> routes;
  std::map<int, int> sizes;
  std::vector<std::string> failures;  // first few, human readable
  bool ok() const {
    return mismatches == 0 && invalid_colorings == 0 && tree_errors == 0 && route_errors == 0;
  }
};

/// Solves `samples` generated class members with 1..n_max vertices through
/// the decomposition pipeline and compares against the exact oracle.
/// Weighted mode (p5-cop5 only) draws weights uniformly from 1..3 and
/// compares with chi_w_exact. Every decomposition tree is validated and
/// every route re-checked (O3-free blocks, C5 quotients).
CrossCheckReport cross_check_pipeline(const GraphClass& cls, int samples, int n_max,
                                      std::uint64_t seed, bool weighted = false,
                                      const Limits& limits = {});

}  // namespace p5col
