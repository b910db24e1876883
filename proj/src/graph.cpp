#include "lineinv/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace lineinv {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) fail(Errc::ParameterError, "negative vertex count");
  adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
  for (Edge& e : edges) {
    check_endpoints(e.first, e.second);
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      fail(Errc::DuplicateEdge, "edge (" + std::to_string(edges[i].first) + "," +
                                    std::to_string(edges[i].second) + ") listed twice");
    }
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_endpoints(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    fail(Errc::VertexOutOfRange, "vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) fail(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return adj_[v];
}

int Graph::edge_index(int u, int v) const {
  Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  return components().size() == 1;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adj_[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
    fail(Errc::VertexOutOfRange, "vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) fail(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
  if (g.has_edge(u, v)) {
    fail(Errc::DuplicateEdge,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  }
  std::vector<Edge> edges = g.edges();
  edges.push_back(make_edge(u, v));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph del_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    fail(Errc::MissingEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") absent");
  }
  Edge e = make_edge(u, v);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph add_vertex(const Graph& g) { return Graph(g.vertex_count() + 1, g.edges()); }

Graph del_vertex(const Graph& g, int v) {
  if (g.degree(v) != 0) {
    fail(Errc::DegreeViolation, "vertex " + std::to_string(v) + " is not isolated");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    edges.push_back(make_edge(e.first - (e.first > v), e.second - (e.second > v)));
  }
  return Graph(g.vertex_count() - 1, std::move(edges));
}

Graph relocate_edge(const Graph& g, Edge from, Edge to) {
  if (!g.has_edge(from.first, from.second)) {
    fail(Errc::MissingEdge, "edge (" + std::to_string(from.first) + "," +
                                std::to_string(from.second) + ") absent");
  }
  // Validate the destination against the original graph so that
  // relocating an edge onto itself is rejected rather than a no-op.
  if (to.first < 0 || to.first >= g.vertex_count() || to.second < 0 ||
      to.second >= g.vertex_count()) {
    fail(Errc::VertexOutOfRange,
         "vertex pair (" + std::to_string(to.first) + "," + std::to_string(to.second) + ")");
  }
  if (to.first == to.second) fail(Errc::SelfLoop, "self loop at vertex " + std::to_string(to.first));
  if (g.has_edge(to.first, to.second)) {
    fail(Errc::DuplicateEdge, "edge (" + std::to_string(to.first) + "," +
                                  std::to_string(to.second) + ") already present");
  }
  return add_edge(del_edge(g, from.first, from.second), to.first, to.second);
}

Graph merge_degree1_vertices(const Graph& g, int a, int b) {
  if (g.degree(a) != 1 || g.degree(b) != 1) {
    fail(Errc::DegreeViolation, "merge requires two degree-1 vertices, got degrees " +
                                    std::to_string(g.degree(a)) + " and " +
                                    std::to_string(g.degree(b)));
  }
  if (a == b) fail(Errc::ParameterError, "merge of a vertex with itself");
  if (g.has_edge(a, b)) {
    fail(Errc::AdjacentEndpoints,
         "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
  }
  int nb = g.neighbors(b)[0];
  if (nb == g.neighbors(a)[0]) {
    fail(Errc::DuplicateEdge, "merging " + std::to_string(a) + " and " + std::to_string(b) +
                                  " would duplicate the edge to " + std::to_string(nb));
  }
  Graph with_edge = add_edge(del_edge(g, b, nb), a, nb);
  return del_vertex(with_edge, b);
}

Graph split_degree2_vertex(const Graph& g, int c) {
  if (g.degree(c) != 2) {
    fail(Errc::DegreeViolation,
         "split requires a degree-2 vertex, got degree " + std::to_string(g.degree(c)));
  }
  int keep = g.neighbors(c)[0];
  int move = g.neighbors(c)[1];
  (void)keep;
  Graph grown = add_vertex(del_edge(g, c, move));
  return add_edge(grown, grown.vertex_count() - 1, move);
}

std::vector<int> degree_profile(const Graph& g) {
  std::vector<int> z(std::max(g.vertex_count(), 1), 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++z[g.degree(v)];
  return z;
}

IncidenceMatrix incidence_matrix(const Graph& g) {
  IncidenceMatrix b;
  b.rows = g.vertex_count();
  b.cols = g.edge_count();
  b.data.assign(static_cast<size_t>(b.rows) * b.cols, 0);
  for (int j = 0; j < b.cols; ++j) {
    const Edge& e = g.edges()[j];
    b.data[static_cast<size_t>(e.first) * b.cols + j] = 1;
    b.data[static_cast<size_t>(e.second) * b.cols + j] = 1;
  }
  return b;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m)) fail(Errc::MalformedHeader, "expected header \"n m\"");
  if (n < 0 || m < 0) fail(Errc::MalformedHeader, "negative counts in header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) {
      fail(Errc::MalformedHeader,
           "header promises " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(Errc::VertexOutOfRange,
           "vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  std::string rest;
  if (in >> rest) fail(Errc::MalformedHeader, "trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::IoFailure, "cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::IoFailure, "cannot open " + path);
  f << serialize_edge_list(g);
  if (!f) fail(Errc::IoFailure, "write failed for " + path);
}

std::string adjacency_csv(const Graph& g) {
  std::ostringstream out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = 0; j < g.vertex_count(); ++j) {
      if (j) out << ',';
      out << (g.has_edge(i, j) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::DegreeViolation: return "DegreeViolation";
    case Errc::AdjacentEndpoints: return "AdjacentEndpoints";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::NotALineGraph: return "NotALineGraph";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SmithGraphExcluded: return "SmithGraphExcluded";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::TimeLimit: return "TimeLimit";
    case Errc::NotEnoughNonEdges: return "NotEnoughNonEdges";
    case Errc::EmptyGadget: return "EmptyGadget";
    case Errc::ParameterError: return "ParameterError";
    case Errc::RejectionBudgetExhausted: return "RejectionBudgetExhausted";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::InconsistentInputs: return "InconsistentInputs";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace lineinv
