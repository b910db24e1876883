#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lineinv/error.hpp"

namespace lineinv {

/// Undirected edge stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph with value semantics. Vertices are 0..n-1; edges
/// are kept sorted lexicographically, which fixes the column order of the
/// incidence matrix and every edge-indexed structure built on top.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// Index of (u,v) in the sorted edge list; -1 if absent.
  int edge_index(int u, int v) const;

  bool connected() const;
  /// Vertex sets of connected components, each sorted, ordered by smallest
  /// member. Isolated vertices form their own components.
  std::vector<std::vector<int>> components() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_endpoints(int u, int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Edit operations. All return a new graph and leave the input untouched.

Graph add_edge(const Graph& g, int u, int v);
Graph del_edge(const Graph& g, int u, int v);
Graph add_vertex(const Graph& g);
/// Removes an isolated vertex; remaining labels are compacted preserving
/// relative order.
Graph del_vertex(const Graph& g, int v);
/// Deletes edge `from` and adds edge `to` in one step.
Graph relocate_edge(const Graph& g, Edge from, Edge to);
/// Identifies two non-adjacent degree-1 vertices a and b: b disappears and its
/// single edge is reattached to a. Rejected when both hang off the same
/// neighbor (the reattachment would duplicate an edge).
Graph merge_degree1_vertices(const Graph& g, int a, int b);
/// Splits a degree-2 vertex c into two degree-1 vertices: c keeps its smaller
/// neighbor and a fresh vertex (label n) takes the larger one.
Graph split_degree2_vertex(const Graph& g, int c);

/// z[k] = number of vertices of degree k, k = 0..n-1.
std::vector<int> degree_profile(const Graph& g);

/// 0/1 vertex-by-edge incidence matrix; columns follow the sorted edge list.
struct IncidenceMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> data;  // row-major

  int at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

IncidenceMatrix incidence_matrix(const Graph& g);

// Edge-list text format: header "n m" followed by m lines "u v", 0-indexed,
// LF-terminated ASCII.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);
std::string serialize_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

/// n rows of comma-separated 0/1 (debugging aid).
std::string adjacency_csv(const Graph& g);

}  // namespace lineinv
