#include "lineinv/pseudo_inverse.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "lineinv/line_ops.hpp"

namespace lineinv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Vertex pairs eligible for flipping: both endpoints in the same component of
/// h_tilde, edge pairs (removals) before non-edge pairs (additions), each side
/// in ascending order. Removal-first ordering makes ties between equally small
/// repairs resolve toward removing edges. A minimal repair never joins two
/// components: restricting an optimal solution to the pairs inside each
/// component stays feasible (induced subgraphs of line graphs are line
/// graphs) and only gets smaller.
std::vector<Edge> candidate_pairs(const Graph& h) {
  std::vector<int> comp_of(h.vertex_count(), -1);
  auto comps = h.components();
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (int v : comps[c]) comp_of[v] = c;
  }
  std::vector<Edge> pairs;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < h.vertex_count(); ++i) {
      for (int j = i + 1; j < h.vertex_count(); ++j) {
        if (comp_of[i] == comp_of[j] && h.has_edge(i, j) == (pass == 0)) pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

FlipSet flips_for(const Graph& h, const std::vector<Edge>& chosen) {
  FlipSet flips;
  flips.reserve(chosen.size());
  for (const Edge& e : chosen) {
    flips.push_back(Flip{e.first, e.second, !h.has_edge(e.first, e.second)});
  }
  std::sort(flips.begin(), flips.end(),
            [](const Flip& a, const Flip& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return flips;
}

/// Calls visit() for each size-k subset of pairs in lexicographic order until
/// visit returns true. `chosen` holds the current subset.
bool for_each_subset(const std::vector<Edge>& pairs, int k,
                     std::vector<Edge>& chosen,
                     const std::function<bool()>& visit, size_t start = 0) {
  if (static_cast<int>(chosen.size()) == k) return visit();
  for (size_t i = start; i + (k - chosen.size()) <= pairs.size(); ++i) {
    chosen.push_back(pairs[i]);
    if (for_each_subset(pairs, k, chosen, visit, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

PseudoInverseSolution finish_enumeration_solution(const Graph& h_tilde, const FlipSet& flips,
                                                  long long nodes, Clock::time_point start) {
  PseudoInverseSolution sol;
  sol.flips = flips;
  sol.h_hat = apply_flips(h_tilde, flips);
  RootResult r = root(sol.h_hat);
  sol.g_hat = r.roots[0];
  sol.root_edge_of = r.edge_maps[0];
  sol.objective = static_cast<int>(flips.size());
  sol.engine = Engine::Enumeration;
  sol.stats.nodes = nodes;
  sol.stats.wall_ms = ms_since(start);
  sol.stats.proved_optimal = true;
  return sol;
}

}  // namespace

Graph apply_flips(const Graph& g, const FlipSet& flips) {
  Graph out = g;
  for (const Flip& f : flips) {
    out = f.add ? add_edge(out, f.u, f.v) : del_edge(out, f.u, f.v);
  }
  return out;
}

const char* engine_name(Engine e) {
  return e == Engine::Enumeration ? "enumeration" : "branch_and_bound";
}

PseudoInverseSolution solve_enumeration(const Graph& h_tilde, int k_max) {
  if (k_max < 0) fail(Errc::ParameterError, "negative flip budget");
  auto start = Clock::now();
  std::vector<Edge> pairs = candidate_pairs(h_tilde);
  long long nodes = 0;
  for (int k = 0; k <= k_max && k <= static_cast<int>(pairs.size()); ++k) {
    std::vector<Edge> chosen;
    FlipSet found;
    bool hit = for_each_subset(pairs, k, chosen, [&]() {
      ++nodes;
      Graph candidate = apply_flips(h_tilde, flips_for(h_tilde, chosen));
      if (!is_line_graph(candidate)) return false;
      found = flips_for(h_tilde, chosen);
      return true;
    });
    if (hit) return finish_enumeration_solution(h_tilde, found, nodes, start);
  }
  fail(Errc::BudgetExhausted,
       "no flip set of size <= " + std::to_string(k_max) + " yields a line graph");
}

std::vector<FlipSet> all_minimal_flip_sets(const Graph& h_tilde, int k_max) {
  int k_opt = solve_enumeration(h_tilde, k_max).objective;
  std::vector<Edge> pairs = candidate_pairs(h_tilde);
  std::vector<FlipSet> out;
  std::vector<Edge> chosen;
  for_each_subset(pairs, k_opt, chosen, [&]() {
    FlipSet flips = flips_for(h_tilde, chosen);
    if (is_line_graph(apply_flips(h_tilde, flips))) out.push_back(std::move(flips));
    return false;  // keep going: collect every optimum
  });
  return out;
}

IlpInstance build_ilp(const Graph& h_tilde) {
  return IlpInstance{h_tilde, h_tilde.vertex_count(), h_tilde.vertex_count() + 1};
}

namespace {

/// Branch-and-bound working state for one connected component of h_tilde.
/// Vertices are relabeled 0..mc-1 following the sorted component list, so
/// local pair order matches the global lexicographic order.
struct ComponentSolver {
  int mc;
  std::vector<std::uint8_t> adj;    // mc x mc, mutated as flips are branched on
  std::vector<Edge> pairs;          // local pairs, removals first then additions
  long long* nodes;
  const Clock::time_point deadline;
  bool* timed_out;

  std::vector<Edge> best_flips;                  // local pairs flipped
  std::vector<std::pair<int, int>> best_columns;  // row pair per local column
  int best_rows = 0;
  bool solved = false;

  std::uint8_t& a(int i, int j) { return adj[static_cast<size_t>(i) * mc + j]; }

  bool out_of_time() {
    if (*timed_out) return true;
    if ((*nodes & 0xFFF) == 0 && Clock::now() >= deadline) *timed_out = true;
    return *timed_out;
  }

  /// Root realizability of the current adjacency: assign each column (vertex)
  /// a pair of incidence rows so shared rows reproduce adjacencies exactly.
  /// Runs piecewise over the connected parts of the current graph, giving each
  /// part its own block of rows; fresh rows must appear in index order, which
  /// removes row-permutation symmetry.
  bool realizable(std::vector<std::pair<int, int>>* columns_out, int* rows_out) {
    std::vector<int> piece_of(mc, -1);
    std::vector<std::vector<int>> pieces;
    for (int s = 0; s < mc; ++s) {
      if (piece_of[s] != -1) continue;
      int id = static_cast<int>(pieces.size());
      pieces.emplace_back();
      std::vector<int> queue{s};
      piece_of[s] = id;
      size_t qi = 0;
      while (qi < queue.size()) {
        int v = queue[qi++];
        pieces[id].push_back(v);
        for (int w = 0; w < mc; ++w) {
          if (a(v, w) && piece_of[w] == -1) {
            piece_of[w] = id;
            queue.push_back(w);
          }
        }
      }
    }

    std::vector<std::pair<int, int>> columns(mc, {-1, -1});
    int row_offset = 0;
    for (const auto& piece : pieces) {
      int size = static_cast<int>(piece.size());
      int cap = size + 1;  // a connected graph with `size` edges has at most size+1 vertices
      std::vector<std::pair<int, int>> local(size, {-1, -1});
      int used = 0;
      if (!assign_piece(piece, 0, local, used, cap)) return false;
      for (int t = 0; t < size; ++t) {
        columns[piece[t]] = {row_offset + local[t].first, row_offset + local[t].second};
      }
      row_offset += used;
    }
    if (columns_out) *columns_out = std::move(columns);
    if (rows_out) *rows_out = row_offset;
    return true;
  }

  bool assign_piece(const std::vector<int>& piece, int t,
                    std::vector<std::pair<int, int>>& local, int& used, int cap) {
    if (t == static_cast<int>(piece.size())) return true;
    if (out_of_time()) return false;
    int c = piece[t];

    // Candidate row pairs. The first column opens rows 0 and 1 of the piece;
    // later columns share exactly one row with some already-assigned neighbor,
    // so candidates are anchored there.
    std::vector<std::pair<int, int>> cands;
    if (t == 0) {
      cands.emplace_back(0, 1);
    } else {
      int anchor = -1;
      for (int s = 0; s < t && anchor < 0; ++s) {
        if (a(c, piece[s])) anchor = s;
      }
      // BFS piece ordering guarantees an assigned neighbor exists.
      auto [ar1, ar2] = local[anchor];
      for (int r : {ar1, ar2}) {
        for (int r2 = 0; r2 <= used && r2 <= cap - 1; ++r2) {
          if (r2 == r) continue;
          cands.emplace_back(std::min(r, r2), std::max(r, r2));
        }
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }

    for (const auto& cand : cands) {
      ++*nodes;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) {
        int overlap = (cand.first == local[s].first) + (cand.first == local[s].second) +
                      (cand.second == local[s].first) + (cand.second == local[s].second);
        ok = overlap == a(c, piece[s]);
      }
      if (!ok) continue;
      int prev_used = used;
      used = std::max(used, std::max(cand.first, cand.second) + 1);
      local[t] = cand;
      if (assign_piece(piece, t + 1, local, used, cap)) return true;
      local[t] = {-1, -1};
      used = prev_used;
    }
    return false;
  }

  /// Lexicographic subsets of `budget` flips; first realizable one wins, and
  /// sets smaller than the budget were already refuted in earlier rounds.
  bool search_budget(int budget, size_t start, std::vector<Edge>& chosen) {
    if (static_cast<int>(chosen.size()) == budget) {
      ++*nodes;
      std::vector<std::pair<int, int>> columns;
      int rows = 0;
      if (!realizable(&columns, &rows)) return false;
      best_flips = chosen;
      best_columns = std::move(columns);
      best_rows = rows;
      solved = true;
      return true;
    }
    for (size_t i = start; i + (budget - chosen.size()) <= pairs.size(); ++i) {
      if (out_of_time()) return false;
      auto [u, v] = pairs[i];
      a(u, v) ^= 1;
      a(v, u) ^= 1;
      chosen.push_back(pairs[i]);
      if (search_budget(budget, i + 1, chosen)) return true;
      chosen.pop_back();
      a(u, v) ^= 1;
      a(v, u) ^= 1;
    }
    return false;
  }

  bool solve() {
    for (int budget = 0; budget <= static_cast<int>(pairs.size()); ++budget) {
      // Refusing to start a new round after the deadline keeps a zero or
      // expired budget from claiming a proof, whatever the node counter says.
      if (*timed_out || Clock::now() >= deadline) {
        *timed_out = true;
        return false;
      }
      std::vector<Edge> chosen;
      if (search_budget(budget, 0, chosen)) return true;
      if (*timed_out) return false;
    }
    return false;
  }
};

}  // namespace

PseudoInverseSolution solve_branch_and_bound(const IlpInstance& inst, const BnbOptions& opts) {
  auto start = Clock::now();
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(opts.time_limit_s));
  const Graph& h = inst.h_tilde;

  long long nodes = 0;
  bool timed_out = false;
  FlipSet flips;
  std::vector<Edge> root_edges(h.vertex_count(), {-1, -1});
  int row_offset = 0;

  for (const auto& comp : h.components()) {
    ComponentSolver cs{static_cast<int>(comp.size()), {}, {}, &nodes, deadline, &timed_out,
                       {}, {}, 0, false};
    cs.adj.assign(static_cast<size_t>(cs.mc) * cs.mc, 0);
    for (int i = 0; i < cs.mc; ++i) {
      for (int j = i + 1; j < cs.mc; ++j) {
        if (h.has_edge(comp[i], comp[j])) {
          cs.a(i, j) = 1;
          cs.a(j, i) = 1;
        }
      }
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < cs.mc; ++i) {
        for (int j = i + 1; j < cs.mc; ++j) {
          if (cs.a(i, j) == (pass == 0)) cs.pairs.emplace_back(i, j);
        }
      }
    }

    cs.solve();
    if (cs.solved) {
      for (const Edge& p : cs.best_flips) {
        int u = comp[p.first], v = comp[p.second];
        flips.push_back(Flip{u, v, !h.has_edge(u, v)});
      }
      for (int t = 0; t < cs.mc; ++t) {
        root_edges[comp[t]] = {row_offset + cs.best_columns[t].first,
                               row_offset + cs.best_columns[t].second};
      }
      row_offset += cs.best_rows;
    } else {
      // Time limit: fall back to stripping this component bare, which is
      // always realizable (isolated vertices root as disjoint edges).
      for (int i = 0; i < cs.mc; ++i) {
        for (int j = i + 1; j < cs.mc; ++j) {
          if (h.has_edge(comp[i], comp[j])) flips.push_back(Flip{comp[i], comp[j], false});
        }
      }
      for (int t = 0; t < cs.mc; ++t) {
        root_edges[comp[t]] = {row_offset, row_offset + 1};
        row_offset += 2;
      }
    }
  }

  std::sort(flips.begin(), flips.end(),
            [](const Flip& a, const Flip& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  PseudoInverseSolution sol;
  sol.flips = flips;
  sol.h_hat = apply_flips(h, flips);
  sol.g_hat = Graph(row_offset, std::vector<Edge>(root_edges.begin(), root_edges.end()));
  sol.root_edge_of = std::move(root_edges);
  sol.objective = static_cast<int>(flips.size());
  sol.engine = Engine::BranchAndBound;
  sol.stats.nodes = nodes;
  sol.stats.wall_ms = ms_since(start);
  sol.stats.proved_optimal = !timed_out;
  return sol;
}

bool verify_solution(const Graph& h_tilde, const PseudoInverseSolution& sol, std::string* diag) {
  auto reject = [&](const std::string& why) {
    if (diag) *diag = why;
    return false;
  };
  int m = h_tilde.vertex_count();
  if (sol.h_hat.vertex_count() != m) return reject("h_hat vertex count differs from h_tilde");
  if (sol.objective != static_cast<int>(sol.flips.size())) {
    return reject("objective does not equal flip count");
  }

  for (size_t i = 0; i < sol.flips.size(); ++i) {
    const Flip& f = sol.flips[i];
    if (f.u < 0 || f.v < 0 || f.u >= m || f.v >= m || f.u >= f.v) {
      return reject("flip pair out of range or unnormalized");
    }
    if (i > 0 && std::tie(sol.flips[i - 1].u, sol.flips[i - 1].v) >= std::tie(f.u, f.v)) {
      return reject("flips not sorted by pair");
    }
    if (f.add == h_tilde.has_edge(f.u, f.v)) {
      return reject("flip tag disagrees with h_tilde adjacency");
    }
  }

  Graph expected = apply_flips(h_tilde, sol.flips);
  if (!(expected == sol.h_hat)) return reject("h_hat is not h_tilde with flips applied");
  if (!is_line_graph(sol.h_hat)) return reject("h_hat is not a line graph");

  if (static_cast<int>(sol.root_edge_of.size()) != m) return reject("root_edge_of size mismatch");
  std::vector<Edge> cols = sol.root_edge_of;
  for (Edge& e : cols) {
    if (e.first < 0 || e.second < 0 || e.first >= sol.g_hat.vertex_count() ||
        e.second >= sol.g_hat.vertex_count() || e.first == e.second) {
      return reject("root edge out of range");
    }
    e = make_edge(e.first, e.second);
  }
  std::vector<Edge> sorted_cols = cols;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  if (std::adjacent_find(sorted_cols.begin(), sorted_cols.end()) != sorted_cols.end()) {
    return reject("duplicate incidence columns");
  }
  if (sorted_cols != sol.g_hat.edges()) return reject("g_hat edges do not match incidence columns");
  for (int v = 0; v < sol.g_hat.vertex_count(); ++v) {
    if (sol.g_hat.degree(v) == 0) return reject("g_hat keeps an isolated root vertex");
  }

  // B'B = A(h_tilde) + 2I + X.Z entrywise: column overlaps must equal the
  // flipped adjacency plus 2 on the diagonal.
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      int overlap = (cols[i].first == cols[j].first) + (cols[i].first == cols[j].second) +
                    (cols[i].second == cols[j].first) + (cols[i].second == cols[j].second);
      int a_ij = h_tilde.has_edge(i, j) ? 1 : 0;
      int x_ij = 0;
      for (const Flip& f : sol.flips) {
        if (f.u == i && f.v == j) x_ij = 1;
      }
      int z_ij = a_ij ? -1 : 1;
      int rhs = (i == j ? 2 : 0) + a_ij + x_ij * z_ij;
      if (overlap != rhs) {
        return reject("factorization identity fails at entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
      }
    }
  }
  return true;
}

namespace {

std::string xname(int i, int j) {
  return "x_" + std::to_string(std::min(i, j)) + "_" + std::to_string(std::max(i, j));
}
std::string bname(int k, int i) { return "b_" + std::to_string(k) + "_" + std::to_string(i); }
std::string pname(int k, int i, int j) {
  return "p_" + std::to_string(k) + "_" + std::to_string(std::min(i, j)) + "_" +
         std::to_string(std::max(i, j));
}

}  // namespace

void export_lp(const IlpInstance& inst, std::ostream& out) {
  const int m = inst.m;
  const int n = inst.n;
  const Graph& h = inst.h_tilde;

  out << "\\ minimum edge-flip line-graph fit: m=" << m << " target vertices, n=" << n
      << " incidence rows\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      out << (first ? " " : " + ") << xname(i, j);
      first = false;
    }
  }
  if (first) out << " 0 " << bname(0, 0);
  out << "\n";

  out << "Subject To\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out << " c_" << i << "_" << j << ":";
      for (int k = 0; k < n; ++k) out << (k ? " + " : " ") << pname(k, i, j);
      if (i == j) {
        out << " = 2\n";
      } else if (h.has_edge(i, j)) {
        out << " + " << xname(i, j) << " = 1\n";
      } else {
        out << " - " << xname(i, j) << " = 0\n";
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        const std::string tag = std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
        if (i == j) {
          out << " p_" << tag << "_lo: 2 " << bname(k, i) << " - 2 " << pname(k, i, j)
              << " >= 0\n";
          out << " p_" << tag << "_hi: 2 " << bname(k, i) << " - " << pname(k, i, j)
              << " <= 1\n";
        } else {
          out << " p_" << tag << "_lo: " << bname(k, i) << " + " << bname(k, j) << " - 2 "
              << pname(k, i, j) << " >= 0\n";
          out << " p_" << tag << "_hi: " << bname(k, i) << " + " << bname(k, j) << " - "
              << pname(k, i, j) << " <= 1\n";
        }
      }
    }
  }

  out << "Binary\n";
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) out << " " << bname(k, i) << "\n";
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out << " " << xname(i, j) << "\n";
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) out << " " << pname(k, i, j) << "\n";
    }
  }
  out << "End\n";
}

void export_lp(const IlpInstance& inst, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::IoFailure, "cannot open " + path);
  export_lp(inst, f);
  if (!f) fail(Errc::IoFailure, "write failed for " + path);
}

}  // namespace lineinv
