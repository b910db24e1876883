#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lineinv/graph.hpp"

namespace lineinv {

struct LineGraphResult {
  Graph h;                     // line graph; vertex i represents edge_map[i]
  std::vector<Edge> edge_map;  // sorted edge list of the source graph
};

/// L(g): one vertex per edge of g, adjacent iff the edges share an endpoint.
LineGraphResult line_graph(const Graph& g);

/// Partition of the edges of h into cliques such that every vertex lies in at
/// most two of them. `clique_of_edge` is aligned with h.edges().
struct KrauszPartition {
  std::vector<std::vector<int>> cliques;
  std::vector<int> clique_of_edge;
};

struct KrauszOutcome {
  std::optional<KrauszPartition> partition;
  /// When no partition exists: the edge at which the deepest search branch ran
  /// out of assignments.
  Edge witness{-1, -1};
};

/// Deterministic search: edges are processed in lexicographic order and each
/// uncovered edge first tries to extend existing cliques (oldest first) before
/// opening a new one.
KrauszOutcome krausz_partition(const Graph& h);

struct RootResult {
  /// One or two graphs mapping to h under the line-graph operator. Two entries
  /// occur exactly when h has a triangle component, whose preimage may be
  /// either the 3-star or the triangle; the star choice is listed first.
  std::vector<Graph> roots;
  bool ambiguous = false;
  /// edge_maps[r][v] = edge of roots[r] realizing vertex v of h.
  std::vector<std::vector<Edge>> edge_maps;
};

RootResult root(const Graph& h);

bool is_line_graph(const Graph& h);

/// First induced 3-star found, as {hub, leaf, leaf, leaf} with the hub scanned
/// in ascending order; nullopt when h is claw-free.
std::optional<std::array<int, 4>> contains_induced_claw(const Graph& h);

}  // namespace lineinv
