#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p5col/graph.hpp"

namespace p5col {

/// Permutation-invariant fingerprint (degree and neighbor-degree profile,
/// triangle counts). Equal for isomorphic graphs.
std::uint64_t invariant_hash(const Graph& g);

/// Mapping phi with g.adjacent(u,v) == h.adjacent(phi[u], phi[v]), if any.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace p5col
