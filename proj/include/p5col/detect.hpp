#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "p5col/graph.hpp"
#include "p5col/limits.hpp"

namespace p5col {

/// Host vertices realizing a named pattern as an induced subgraph. The order
/// is canonical for the pattern: path order for P5 (and for co-P5, read in the
/// complement), cyclic order for holes, the non-adjacent pair first for
/// K_p - e.
struct Witness {
  std::string pattern;
  std::vector<Vertex> vertices;

  bool operator==(const Witness&) const = default;
};

/// The graph a witness claims to induce, on 0..k-1 in witness order.
/// Knows "P5", "co-P5", "C<k>", "co-C<k>", "K<p>-e" and "O3".
Graph pattern_graph(const std::string& pattern);

/// True iff induced(g, w.vertices) equals pattern_graph(w.pattern) under the
/// listed order.
bool witness_holds(const Graph& g, const Witness& w);

std::optional<Witness> find_induced_p5(const Graph& g);
std::optional<Witness> find_induced_co_p5(const Graph& g);
std::optional<Witness> find_induced_c5(const Graph& g);

/// Induced chordless cycle of length k >= 4 (k >= 3 degenerates to a
/// triangle), or in the complement when `in_complement` is set.
std::optional<Witness> find_induced_cycle(const Graph& g, int k,
                                          bool in_complement = false);

/// Throws std::invalid_argument for p < 3.
std::optional<Witness> find_induced_kp_minus_e(const Graph& g, int p);

/// Independent triple, or nullopt when g is O3-free.
std::optional<Witness> find_independent_triple(const Graph& g);
inline bool is_o3_free(const Graph& g) { return !find_independent_triple(g); }

struct BergeResult {
  bool berge = true;
  std::optional<Witness> witness;  // odd hole "C<k>" or odd antihole "co-C<k>"
};

/// Enumerates odd holes and antiholes. Throws CutoffExceeded when
/// g.n() > limits.berge_n.
BergeResult is_berge_small(const Graph& g, const Limits& limits = {});

/// {P5, co-P5}-free or {P5, K_p - e}-free.
struct GraphClass {
  enum class Kind { P5CoP5, P5Kpe };
  Kind kind = Kind::P5CoP5;
  int p = 0;

  static GraphClass p5_cop5() { return {Kind::P5CoP5, 0}; }
  /// Throws std::invalid_argument for p < 3.
  static GraphClass p5_kpe(int p);

  /// "p5-cop5" or "p5-kpe".
  std::string name() const;
  /// Human-readable, e.g. "{P5, K4-e}-free".
  std::string describe() const;
};

/// nullopt when g is in the class, else the first forbidden pattern found
/// (P5 is tried before the second pattern).
std::optional<Witness> class_membership(const Graph& g, const GraphClass& cls);

class ClassViolation : public std::runtime_error {
 public:
  ClassViolation(const GraphClass& cls, Witness witness);
  const Witness& witness() const { return witness_; }
  const GraphClass& graph_class() const { return class_; }

 private:
  GraphClass class_;
  Witness witness_;
};

struct RamseyWitness {
  VertexSet a;
  VertexSet b;
  bool complete = false;  // otherwise the bipartite graph between a and b is empty
};

/// Largest t with s * t^s <= n, i.e. floor((n/s)^(1/s)).
int ramsey_target(int n, int s);

/// Sets A' of A and B' of B with |A'| = |B'| = ramsey_target(|A|, s) that are
/// completely joined or completely non-adjacent. Requires A, B to be
/// independent, to partition V(g), to have equal size n > s^(s+1), and
/// n <= limits.ramsey_side. Found by exhaustive search over subsets of A.
RamseyWitness bipartite_ramsey_witness(const Graph& g, const VertexSet& a,
                                       const VertexSet& b, int s,
                                       const Limits& limits = {});

}  // namespace p5col
