#include "p5col/detect.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "p5col/errors.hpp"

namespace p5col {

namespace {

// Induced-path and induced-cycle search over g or its complement. Candidates
// are tried in increasing id order, so the first hit is lexicographically
// smallest among the explored orderings.
template <bool Complement>
class InducedSearch {
 public:
  explicit InducedSearch(const Graph& g) : g_(g), in_path_(g.n(), 0) {}

  bool adj(Vertex u, Vertex v) const {
    if constexpr (Complement) {
      return u != v && !g_.adjacent(u, v);
    } else {
      return g_.adjacent(u, v);
    }
  }

  int degree(Vertex v) const {
    if constexpr (Complement) {
      return g_.n() - 1 - g_.degree(v);
    } else {
      return g_.degree(v);
    }
  }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if constexpr (Complement) {
      for (Vertex w = 0; w < g_.n(); ++w) {
        if (adj(v, w) && f(w)) return;
      }
    } else {
      for (Vertex w : g_.neighbors(v)) {
        if (f(w)) return;
      }
    }
  }

  std::optional<std::vector<Vertex>> path(int k) {
    if (k < 1 || k > g_.n()) return std::nullopt;
    for (Vertex s = 0; s < g_.n(); ++s) {
      if (k > 1 && degree(s) < 1) continue;
      path_.assign(1, s);
      in_path_[s] = 1;
      bool found = extend_path(k);
      in_path_[s] = 0;
      if (found) return path_;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> cycle(int k) {
    if (k < 3 || k > g_.n()) return std::nullopt;
    for (Vertex s = 0; s < g_.n(); ++s) {
      if (degree(s) < 2) continue;
      path_.assign(1, s);
      in_path_[s] = 1;
      bool found = extend_cycle(k);
      in_path_[s] = 0;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend_path(int k) {
    if (static_cast<int>(path_.size()) == k) return true;
    const Vertex last = path_.back();
    const bool interior = static_cast<int>(path_.size()) + 1 < k;
    bool found = false;
    for_each_neighbor(last, [&](Vertex w) {
      if (in_path_[w]) return false;
      if (interior && degree(w) < 2) return false;
      for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
        if (adj(w, path_[i])) return false;
      }
      path_.push_back(w);
      in_path_[w] = 1;
      found = extend_path(k);
      in_path_[w] = 0;
      if (!found) path_.pop_back();
      return found;
    });
    return found;
  }

  bool extend_cycle(int k) {
    const int pos = static_cast<int>(path_.size());
    if (pos == k) return true;
    const Vertex start = path_[0];
    const Vertex last = path_.back();
    const bool closing = pos == k - 1;
    bool found = false;
    for_each_neighbor(last, [&](Vertex w) {
      if (w <= start || in_path_[w] || degree(w) < 2) return false;
      if (closing) {
        if (!adj(w, start) || w < path_[1]) return false;
      } else if (pos >= 2 && adj(w, start)) {
        return false;
      }
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (adj(w, path_[i])) return false;
      }
      path_.push_back(w);
      in_path_[w] = 1;
      found = extend_cycle(k);
      in_path_[w] = 0;
      if (!found) path_.pop_back();
      return found;
    });
    return found;
  }

  const Graph& g_;
  std::vector<char> in_path_;
  std::vector<Vertex> path_;
};

bool extend_clique(const Graph& g, const std::vector<Vertex>& cand,
                   std::size_t from, int need, std::vector<Vertex>& clique) {
  if (need == 0) return true;
  for (std::size_t i = from; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < need) return false;
    Vertex v = cand[i];
    bool ok = std::all_of(clique.begin(), clique.end(),
                          [&](Vertex u) { return g.adjacent(u, v); });
    if (!ok) continue;
    clique.push_back(v);
    if (extend_clique(g, cand, i + 1, need - 1, clique)) return true;
    clique.pop_back();
  }
  return false;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

}  // namespace

Graph pattern_graph(const std::string& pattern) {
  if (pattern == "P5") return path_graph(5);
  if (pattern == "co-P5") return complement(path_graph(5));
  if (pattern == "O3") return empty_graph(3);
  const bool co = pattern.rfind("co-", 0) == 0;
  const std::string base = co ? pattern.substr(3) : pattern;
  try {
    if (base.size() >= 2 && base[0] == 'C') {
      Graph c = cycle_graph(std::stoi(base.substr(1)));
      return co ? complement(c) : c;
    }
    if (!co && base.size() >= 4 && base[0] == 'K' &&
        base.substr(base.size() - 2) == "-e") {
      return complete_minus_edge(std::stoi(base.substr(1, base.size() - 3)));
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unknown pattern '" + pattern + "'");
}

bool witness_holds(const Graph& g, const Witness& w) {
  Graph expected = pattern_graph(w.pattern);
  if (expected.n() != static_cast<int>(w.vertices.size())) return false;
  try {
    return induced(g, w.vertices).graph == expected;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::optional<Witness> find_induced_p5(const Graph& g) {
  if (auto p = InducedSearch<false>(g).path(5)) return Witness{"P5", *p};
  return std::nullopt;
}

std::optional<Witness> find_induced_co_p5(const Graph& g) {
  if (auto p = InducedSearch<true>(g).path(5)) return Witness{"co-P5", *p};
  return std::nullopt;
}

std::optional<Witness> find_induced_c5(const Graph& g) {
  return find_induced_cycle(g, 5, false);
}

std::optional<Witness> find_induced_cycle(const Graph& g, int k, bool in_complement) {
  std::optional<std::vector<Vertex>> c =
      in_complement ? InducedSearch<true>(g).cycle(k) : InducedSearch<false>(g).cycle(k);
  if (!c) return std::nullopt;
  std::string name = "C" + std::to_string(k);
  return Witness{in_complement ? "co-" + name : name, *c};
}

std::optional<Witness> find_induced_kp_minus_e(const Graph& g, int p) {
  if (p < 3) throw std::invalid_argument("K_p - e needs p >= 3");
  const int need = p - 2;
  std::vector<Vertex> common;
  std::vector<Vertex> clique;
  for (Vertex a = 0; a < g.n(); ++a) {
    if (g.degree(a) < need) continue;
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (g.adjacent(a, b) || g.degree(b) < need) continue;
      common.clear();
      auto ra = g.row(a);
      auto rb = g.row(b);
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t bits = ra[w] & rb[w];
        while (bits) {
          common.push_back(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
      if (static_cast<int>(common.size()) < need) continue;
      clique.clear();
      if (extend_clique(g, common, 0, need, clique)) {
        std::vector<Vertex> vs{a, b};
        vs.insert(vs.end(), clique.begin(), clique.end());
        return Witness{"K" + std::to_string(p) + "-e", vs};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_independent_triple(const Graph& g) {
  const int n = g.n();
  const int words = g.words();
  for (Vertex a = 0; a < n; ++a) {
    auto ra = g.row(a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      auto rb = g.row(b);
      // first c > b adjacent to neither
      for (int w = (b + 1) / 64; w < words; ++w) {
        std::uint64_t free = ~(ra[w] | rb[w]);
        if (w == (b + 1) / 64) free &= ~std::uint64_t{0} << ((b + 1) % 64);
        if (w == words - 1 && n % 64 != 0) free &= (std::uint64_t{1} << (n % 64)) - 1;
        if (free) return Witness{"O3", {a, b, w * 64 + std::countr_zero(free)}};
      }
    }
  }
  return std::nullopt;
}

BergeResult is_berge_small(const Graph& g, const Limits& limits) {
  if (g.n() > limits.berge_n) {
    throw CutoffExceeded("Berge check by odd hole/antihole enumeration", g.n(),
                         limits.berge_n);
  }
  for (int k = 5; k <= g.n(); k += 2) {
    if (auto w = find_induced_cycle(g, k, false)) return {false, w};
  }
  // co-C5 is C5, already covered above
  for (int k = 7; k <= g.n(); k += 2) {
    if (auto w = find_induced_cycle(g, k, true)) return {false, w};
  }
  return {true, std::nullopt};
}

GraphClass GraphClass::p5_kpe(int p) {
  if (p < 3) throw std::invalid_argument("class parameter p must be >= 3");
  return {Kind::P5Kpe, p};
}

std::string GraphClass::name() const {
  return kind == Kind::P5CoP5 ? "p5-cop5" : "p5-kpe";
}

std::string GraphClass::describe() const {
  return kind == Kind::P5CoP5 ? "{P5, co-P5}-free"
                              : "{P5, K" + std::to_string(p) + "-e}-free";
}

std::optional<Witness> class_membership(const Graph& g, const GraphClass& cls) {
  if (auto w = find_induced_p5(g)) return w;
  if (cls.kind == GraphClass::Kind::P5CoP5) return find_induced_co_p5(g);
  return find_induced_kp_minus_e(g, cls.p);
}

ClassViolation::ClassViolation(const GraphClass& cls, Witness witness)
    : std::runtime_error("graph is not " + cls.describe() + ": induced " +
                         witness.pattern + " on vertices " +
                         vertex_list(witness.vertices)),
      class_(cls),
      witness_(std::move(witness)) {}

int ramsey_target(int n, int s) {
  if (s < 1 || n < 0) return 0;
  auto fits = [&](long long t) {
    long long value = s;
    for (int i = 0; i < s; ++i) {
      value *= t;
      if (value > n) return false;
    }
    return value <= n;
  };
  int t = 0;
  while (fits(t + 1)) ++t;
  return t;
}

RamseyWitness bipartite_ramsey_witness(const Graph& g, const VertexSet& a,
                                       const VertexSet& b, int s,
                                       const Limits& limits) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("parts must have equal size");
  }
  if (2 * n != g.n()) throw std::invalid_argument("parts must cover V(g)");
  std::vector<int> side(g.n(), -1);
  for (Vertex v : a) {
    if (v < 0 || v >= g.n() || side[v] != -1) {
      throw std::invalid_argument("parts must partition V(g)");
    }
    side[v] = 0;
  }
  for (Vertex v : b) {
    if (v < 0 || v >= g.n() || side[v] != -1) {
      throw std::invalid_argument("parts must partition V(g)");
    }
    side[v] = 1;
  }
  if (!is_independent(g, a) || !is_independent(g, b)) {
    throw std::invalid_argument("parts must be independent sets");
  }
  long long threshold = 1;
  for (int i = 0; i <= s && threshold <= n; ++i) threshold *= s;
  if (n <= threshold) {
    throw std::invalid_argument("part size must exceed s^(s+1)");
  }
  if (n > limits.ramsey_side) {
    throw CutoffExceeded("bipartite Ramsey witness search", n, limits.ramsey_side);
  }

  const int t = ramsey_target(n, s);
  VertexSet sa(a.begin(), a.end());
  VertexSet sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    VertexSet joined;
    VertexSet apart;
    for (Vertex y : sb) {
      bool all = true;
      bool none = true;
      for (int i : idx) {
        if (g.adjacent(sa[i], y)) {
          none = false;
        } else {
          all = false;
        }
      }
      if (all) joined.push_back(y);
      if (none) apart.push_back(y);
    }
    VertexSet chosen;
    for (int i : idx) chosen.push_back(sa[i]);
    if (static_cast<int>(joined.size()) >= t) {
      joined.resize(t);
      return {chosen, joined, true};
    }
    if (static_cast<int>(apart.size()) >= t) {
      apart.resize(t);
      return {chosen, apart, false};
    }
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw std::logic_error("no homogeneous pair of the target size exists");
}

}  // namespace p5col
