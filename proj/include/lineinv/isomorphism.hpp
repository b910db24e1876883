#pragma once

#include <optional>
#include <vector>

#include "lineinv/graph.hpp"

namespace lineinv {

/// Vertex bijection g1 -> g2 preserving adjacency, or nullopt. Backtracking
/// over candidate classes produced by iterated degree refinement; intended for
/// the few dozen vertices this library works with.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);

bool isomorphic(const Graph& g1, const Graph& g2);

}  // namespace lineinv
