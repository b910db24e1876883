#include "lineinv/line_ops.hpp"

#include <algorithm>

namespace lineinv {

LineGraphResult line_graph(const Graph& g) {
  int m = g.edge_count();
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int j = 0; j < m; ++j) {
    incident[g.edges()[j].first].push_back(j);
    incident[g.edges()[j].second].push_back(j);
  }
  std::vector<Edge> h_edges;
  for (const auto& ids : incident) {
    for (size_t a = 0; a < ids.size(); ++a) {
      for (size_t b = a + 1; b < ids.size(); ++b) {
        h_edges.push_back(make_edge(ids[a], ids[b]));
      }
    }
  }
  return LineGraphResult{Graph(m, std::move(h_edges)), g.edges()};
}

namespace {

/// Backtracking state for the clique-partition search. Cliques are identified
/// by creation index, so "oldest first" is just ascending id order.
struct KrauszSearch {
  const Graph& h;
  std::vector<char> covered;                   // per edge index
  std::vector<std::vector<int>> cliques;       // id -> vertex list
  std::vector<std::vector<int>> vertex_cliques;  // vertex -> clique ids (size <= 2)
  std::vector<int> clique_of_edge;
  int witness_edge = -1;  // deepest edge where every branch was exhausted

  explicit KrauszSearch(const Graph& graph)
      : h(graph),
        covered(graph.edge_count(), 0),
        vertex_cliques(graph.vertex_count()),
        clique_of_edge(graph.edge_count(), -1) {}

  bool can_extend(int clique_id, int x) const {
    if (vertex_cliques[x].size() >= 2) return false;
    for (int w : cliques[clique_id]) {
      int idx = h.edge_index(x, w);
      if (idx < 0 || covered[idx]) return false;
    }
    return true;
  }

  void extend(int clique_id, int x) {
    for (int w : cliques[clique_id]) {
      int idx = h.edge_index(x, w);
      covered[idx] = 1;
      clique_of_edge[idx] = clique_id;
    }
    cliques[clique_id].push_back(x);
    vertex_cliques[x].push_back(clique_id);
  }

  void retract(int clique_id, int x) {
    cliques[clique_id].pop_back();
    vertex_cliques[x].pop_back();
    for (int w : cliques[clique_id]) {
      int idx = h.edge_index(x, w);
      covered[idx] = 0;
      clique_of_edge[idx] = -1;
    }
  }

  bool search(int from_edge) {
    int e = from_edge;
    while (e < h.edge_count() && covered[e]) ++e;
    if (e == h.edge_count()) return true;
    auto [u, v] = h.edges()[e];

    for (int id = 0; id < static_cast<int>(cliques.size()); ++id) {
      bool has_u = std::find(cliques[id].begin(), cliques[id].end(), u) != cliques[id].end();
      bool has_v = std::find(cliques[id].begin(), cliques[id].end(), v) != cliques[id].end();
      int x = has_u ? v : u;
      if (has_u == has_v || !can_extend(id, x)) continue;
      extend(id, x);
      if (search(e)) return true;
      retract(id, x);
    }

    if (vertex_cliques[u].size() < 2 && vertex_cliques[v].size() < 2) {
      int id = static_cast<int>(cliques.size());
      cliques.push_back({u, v});
      vertex_cliques[u].push_back(id);
      vertex_cliques[v].push_back(id);
      covered[e] = 1;
      clique_of_edge[e] = id;
      if (search(e)) return true;
      covered[e] = 0;
      clique_of_edge[e] = -1;
      vertex_cliques[u].pop_back();
      vertex_cliques[v].pop_back();
      cliques.pop_back();
    }

    witness_edge = std::max(witness_edge, e);
    return false;
  }
};

bool is_triangle_component(const Graph& h, const std::vector<int>& comp) {
  if (comp.size() != 3) return false;
  return h.has_edge(comp[0], comp[1]) && h.has_edge(comp[0], comp[2]) &&
         h.has_edge(comp[1], comp[2]);
}

/// Turns an edge-clique partition into the graph whose line graph is h.
/// Vertices in fewer than two cliques get private singleton cliques so every
/// h-vertex ends up with exactly the two cliques that form its root edge.
struct RootAssembly {
  Graph graph;
  std::vector<Edge> edge_map;
};

RootAssembly assemble_root(const Graph& h, const std::vector<std::vector<int>>& cliques) {
  std::vector<std::vector<int>> vertex_cliques(h.vertex_count());
  for (int id = 0; id < static_cast<int>(cliques.size()); ++id) {
    for (int v : cliques[id]) vertex_cliques[v].push_back(id);
  }
  int next_id = static_cast<int>(cliques.size());
  for (int v = 0; v < h.vertex_count(); ++v) {
    while (vertex_cliques[v].size() < 2) vertex_cliques[v].push_back(next_id++);
  }
  std::vector<Edge> root_edges(h.vertex_count());
  std::vector<Edge> edge_map(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    Edge e = make_edge(vertex_cliques[v][0], vertex_cliques[v][1]);
    root_edges[v] = e;
    edge_map[v] = e;
  }
  return RootAssembly{Graph(next_id, std::move(root_edges)), std::move(edge_map)};
}

}  // namespace

KrauszOutcome krausz_partition(const Graph& h) {
  KrauszSearch s(h);
  if (s.search(0)) {
    return KrauszOutcome{KrauszPartition{std::move(s.cliques), std::move(s.clique_of_edge)}, {-1, -1}};
  }
  Edge witness =
      s.witness_edge >= 0 ? h.edges()[s.witness_edge] : Edge{-1, -1};
  return KrauszOutcome{std::nullopt, witness};
}

RootResult root(const Graph& h) {
  KrauszOutcome out = krausz_partition(h);
  if (!out.partition) {
    fail(Errc::NotALineGraph, "no clique partition; search exhausted at edge (" +
                                  std::to_string(out.witness.first) + "," +
                                  std::to_string(out.witness.second) + ")");
  }

  std::vector<std::vector<int>> triangle_comps;
  for (const auto& comp : h.components()) {
    if (is_triangle_component(h, comp)) triangle_comps.push_back(comp);
  }

  RootResult result;
  RootAssembly first = assemble_root(h, out.partition->cliques);
  result.roots.push_back(std::move(first.graph));
  result.edge_maps.push_back(std::move(first.edge_map));
  result.ambiguous = !triangle_comps.empty();

  if (result.ambiguous) {
    // Alternate preimage: realize each triangle component as a triangle
    // instead of a 3-star by splitting its single clique into three edges.
    std::vector<std::vector<int>> cliques;
    for (const auto& c : out.partition->cliques) {
      bool is_triangle_clique = false;
      if (c.size() == 3) {
        std::vector<int> sorted_c = c;
        std::sort(sorted_c.begin(), sorted_c.end());
        for (const auto& comp : triangle_comps) {
          if (sorted_c == comp) {
            is_triangle_clique = true;
            break;
          }
        }
      }
      if (is_triangle_clique) {
        cliques.push_back({c[0], c[1]});
        cliques.push_back({c[0], c[2]});
        cliques.push_back({c[1], c[2]});
      } else {
        cliques.push_back(c);
      }
    }
    RootAssembly second = assemble_root(h, cliques);
    result.roots.push_back(std::move(second.graph));
    result.edge_maps.push_back(std::move(second.edge_map));
  }
  return result;
}

bool is_line_graph(const Graph& h) {
  if (contains_induced_claw(h)) return false;
  return krausz_partition(h).partition.has_value();
}

std::optional<std::array<int, 4>> contains_induced_claw(const Graph& h) {
  for (int u = 0; u < h.vertex_count(); ++u) {
    const auto& nbrs = h.neighbors(u);
    int d = static_cast<int>(nbrs.size());
    if (d < 3) continue;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (h.has_edge(nbrs[i], nbrs[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (!h.has_edge(nbrs[i], nbrs[k]) && !h.has_edge(nbrs[j], nbrs[k])) {
            return std::array<int, 4>{u, nbrs[i], nbrs[j], nbrs[k]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lineinv
