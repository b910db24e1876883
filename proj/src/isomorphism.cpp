#include "lineinv/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace lineinv {
namespace {

// Iterated refinement: start from degrees, repeatedly replace each vertex
// color by (color, sorted neighbor colors) until the partition stabilizes.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    // New ids follow the sorted signature order, never the vertex order, so
    // equal signatures receive equal ids in any labeling of the same graph.
    std::map<std::pair<int, std::vector<int>>, int> relabel;
    std::vector<std::pair<int, std::vector<int>>> key_of(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.reserve(g.neighbors(v).size());
      for (int w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      key_of[v] = {color[v], std::move(sig)};
      relabel.emplace(key_of[v], 0);
    }
    int id = 0;
    for (auto& [key, value] : relabel) value = id++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = relabel[key_of[v]];
    int next_classes = static_cast<int>(relabel.size());
    color.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

struct Matcher {
  const Graph& g1;
  const Graph& g2;
  std::vector<int> color1, color2;
  std::vector<std::vector<int>> candidates;  // per g1 vertex, g2 vertices of equal color
  std::vector<int> order;                    // g1 vertices, most constrained first
  std::vector<int> map12;
  std::vector<char> used2;

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w : candidates[v]) {
      if (used2[w]) continue;
      // Edges and non-edges both have to be preserved against every vertex
      // placed so far.
      bool ok = true;
      for (size_t d = 0; d < depth; ++d) {
        int x = order[d];
        if (g1.has_edge(v, x) != g2.has_edge(w, map12[x])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map12[v] = w;
      used2[w] = 1;
      if (extend(depth + 1)) return true;
      map12[v] = -1;
      used2[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  Matcher m{g1, g2, refine_colors(g1), refine_colors(g2), {}, {}, {}, {}};

  // Refinement colors are canonical (label-independent), so histograms must
  // agree between the two graphs.
  std::vector<int> hist1, hist2;
  for (int c : m.color1) {
    if (static_cast<size_t>(c) >= hist1.size()) hist1.resize(c + 1, 0);
    ++hist1[c];
  }
  for (int c : m.color2) {
    if (static_cast<size_t>(c) >= hist2.size()) hist2.resize(c + 1, 0);
    ++hist2[c];
  }
  if (hist1 != hist2) return std::nullopt;

  m.candidates.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (m.color1[v] == m.color2[w]) m.candidates[v].push_back(w);
    }
  }
  m.order.resize(n);
  for (int v = 0; v < n; ++v) m.order[v] = v;
  std::stable_sort(m.order.begin(), m.order.end(), [&](int a, int b) {
    return m.candidates[a].size() < m.candidates[b].size();
  });
  m.map12.assign(n, -1);
  m.used2.assign(n, 0);
  if (!m.extend(0)) return std::nullopt;
  return m.map12;
}

bool isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

}  // namespace lineinv
