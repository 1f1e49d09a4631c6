#pragma once

namespace p5col {

/// Size limits for the exact and enumerative routines. Exceeding one raises
/// CutoffExceeded; nothing falls back to an approximation.
struct Limits {
  int oracle_n = 24;        // chi_exact, clique_number_exact
  int weight_sum = 64;      // chi_w_exact, on the sum of weights
  int berge_n = 16;         // is_berge_small
  int matching_brute_n = 14;
  int ramsey_side = 20;     // bipartite_ramsey_witness, per part
};

}  // namespace p5col
