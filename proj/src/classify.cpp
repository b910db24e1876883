#include "lineinv/classify.hpp"

#include <algorithm>
#include <array>

#include "lineinv/isomorphism.hpp"
#include "lineinv/line_ops.hpp"

namespace lineinv {

const char* case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
    case CaseLabel::IV: return "IV";
    case CaseLabel::DelGroup: return "DEL";
    case CaseLabel::AddGroup: return "ADD";
  }
  return "?";
}

const char* mechanism_name(MechanismLabel label) {
  switch (label) {
    case MechanismLabel::RelocateEdge: return "RelocateEdge";
    case MechanismLabel::MergeVertices: return "MergeVertices";
    case MechanismLabel::MergeAndSplit: return "MergeAndSplit";
    case MechanismLabel::TriangleClosing: return "TriangleClosing";
    case MechanismLabel::Undetermined: return "Undetermined";
  }
  return "?";
}

CaseResult classify_case(const Graph& h, const Graph& h_tilde, const PseudoInverseSolution& sol,
                         const FlipSet& added) {
  for (const Flip& f : added) {
    if (!f.add) fail(Errc::InconsistentInputs, "perturbation contains a removal");
  }
  if (!(apply_flips(h, added) == h_tilde)) {
    fail(Errc::InconsistentInputs, "h_tilde is not h with the added edges");
  }

  if (isomorphic(sol.h_hat, h_tilde)) return CaseResult{CaseLabel::I, false};

  bool single = added.size() == 1;
  bool any_add = std::any_of(sol.flips.begin(), sol.flips.end(),
                             [](const Flip& f) { return f.add; });
  bool any_del = std::any_of(sol.flips.begin(), sol.flips.end(),
                             [](const Flip& f) { return !f.add; });
  if (!any_add) {
    if (isomorphic(sol.h_hat, h)) return CaseResult{CaseLabel::II, false};
    return CaseResult{single ? CaseLabel::III : CaseLabel::DelGroup, false};
  }
  return CaseResult{single ? CaseLabel::IV : CaseLabel::AddGroup, any_del};
}

namespace {

/// Relocation with one shared endpoint that slides an edge along an adjacent
/// edge between two degree-2 vertices; the move closes a triangle at a
/// degree-2 vertex of the line graph.
bool is_triangle_closing_move(const Graph& g, Edge from, Edge to) {
  int shared = -1, s = -1, t = -1;
  if (from.first == to.first) { shared = from.first; t = from.second; s = to.second; }
  else if (from.first == to.second) { shared = from.first; t = from.second; s = to.first; }
  else if (from.second == to.first) { shared = from.second; t = from.first; s = to.second; }
  else if (from.second == to.second) { shared = from.second; t = from.first; s = to.first; }
  if (shared < 0 || s == t) return false;
  return g.has_edge(s, t) && g.degree(s) == 2 && g.degree(t) == 2;
}

std::vector<std::pair<int, int>> merge_candidates(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) != 1) continue;
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (g.degree(b) != 1 || g.has_edge(a, b)) continue;
      if (g.neighbors(a)[0] == g.neighbors(b)[0]) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<Edge, Edge>> relocation_candidates(const Graph& g) {
  std::vector<std::pair<Edge, Edge>> out;
  for (const Edge& from : g.edges()) {
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        if (g.has_edge(u, v)) continue;
        out.emplace_back(from, Edge{u, v});
      }
    }
  }
  return out;
}

}  // namespace

MechanismResult classify_mechanism(const Graph& g, const Graph& g_hat) {
  MechanismResult r;
  if (isomorphic(g, g_hat)) return r;  // nothing to explain

  if (g_hat.vertex_count() == g.vertex_count() - 1 &&
      g_hat.edge_count() == g.edge_count()) {
    for (const auto& [a, b] : merge_candidates(g)) {
      if (isomorphic(merge_degree1_vertices(g, a, b), g_hat)) {
        r.label = MechanismLabel::MergeVertices;
        r.merged = {a, b};
        return r;
      }
    }
  }

  if (g_hat.vertex_count() == g.vertex_count() && g_hat.edge_count() == g.edge_count()) {
    auto relocations = relocation_candidates(g);
    for (const auto& [from, to] : relocations) {
      if (!is_triangle_closing_move(g, from, to)) continue;
      if (isomorphic(relocate_edge(g, from, to), g_hat)) {
        r.label = MechanismLabel::TriangleClosing;
        r.relocation = {from, to};
        return r;
      }
    }
    for (const auto& [from, to] : relocations) {
      if (isomorphic(relocate_edge(g, from, to), g_hat)) {
        r.label = MechanismLabel::RelocateEdge;
        r.relocation = {from, to};
        return r;
      }
    }
  }

  if (g_hat.vertex_count() == g.vertex_count() && g_hat.edge_count() == g.edge_count()) {
    for (const auto& [a, b] : merge_candidates(g)) {
      Graph merged = merge_degree1_vertices(g, a, b);
      for (int c = 0; c < merged.vertex_count(); ++c) {
        if (merged.degree(c) != 2) continue;
        if (isomorphic(split_degree2_vertex(merged, c), g_hat)) {
          r.label = MechanismLabel::MergeAndSplit;
          r.merged = {a, b};
          r.split_vertex = c;
          return r;
        }
      }
    }
  }
  return r;
}

std::vector<std::array<int, 3>> triangle_closing_sites(const Graph& h) {
  if (!is_line_graph(h)) fail(Errc::NotALineGraph, "sites are defined on line graphs");
  std::vector<std::array<int, 3>> sites;
  for (int c = 0; c < h.vertex_count(); ++c) {
    if (h.degree(c) != 2) continue;
    int a = h.neighbors(c)[0];
    int b = h.neighbors(c)[1];
    if (!h.has_edge(a, b)) sites.push_back({a, c, b});
  }
  return sites;
}

}  // namespace lineinv
