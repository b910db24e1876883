#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lineinv/graph.hpp"

namespace lineinv {

/// One toggled vertex pair; `add` records the direction the pair moved.
struct Flip {
  int u = 0;
  int v = 0;
  bool add = false;

  bool operator==(const Flip&) const = default;
};

/// Flips sorted by (u, v); at most one flip per pair.
using FlipSet = std::vector<Flip>;

Graph apply_flips(const Graph& g, const FlipSet& flips);

enum class Engine { Enumeration, BranchAndBound };

const char* engine_name(Engine e);

struct SolveStats {
  long long nodes = 0;         // candidate sets / search nodes examined
  double wall_ms = 0.0;
  bool proved_optimal = true;  // false when a time limit stopped the search
};

/// Minimum-flip reconstruction: h_hat = h_tilde with `flips` applied is a line
/// graph and g_hat is its preimage. `root_edge_of[v]` names the g_hat edge that
/// realizes vertex v, which is exactly column v of the incidence-matrix
/// factorization B'B = A(h_hat) + 2I.
struct PseudoInverseSolution {
  FlipSet flips;
  Graph h_hat;
  Graph g_hat;
  std::vector<Edge> root_edge_of;
  int objective = 0;
  Engine engine = Engine::Enumeration;
  SolveStats stats;
};

/// Tries flip sets of size 0, 1, ... up to k_max. Candidate flips are ordered
/// removals first, then additions, each side by ascending endpoint pair, and
/// the first feasible combination wins: among equally small repairs the result
/// is the lexicographically smallest flip set under that ordering, so edge
/// removals are preferred to additions. Pairs joining different components of
/// h_tilde are never needed by a minimal solution (induced subgraphs of line
/// graphs are line graphs) and are skipped.
PseudoInverseSolution solve_enumeration(const Graph& h_tilde, int k_max = 4);

/// Every optimal flip set, in the enumeration order of solve_enumeration.
std::vector<FlipSet> all_minimal_flip_sets(const Graph& h_tilde, int k_max = 4);

/// Binary program over an (m+1) x m incidence matrix B, pair flips x and the
/// linearization products p[k][i][j] = B[k][i]*B[k][j]:
///   sum_k p[k][i][j] = A[i][j] + 2*delta[i][j] + x[i][j]*z[i][j]
///   B[k][i] + B[k][j] >= 2*p[k][i][j],   B[k][i] + B[k][j] <= 1 + p[k][i][j]
/// with z[i][j] = +1 on non-edges and -1 on edges of h_tilde. The diagonal
/// rows force every B column to sum to 2.
struct IlpInstance {
  Graph h_tilde;
  int m = 0;
  int n = 0;  // m + 1

  long long lp_constraint_count() const { return static_cast<long long>(m) * m; }
  long long prodcon_count() const { return 2LL * m * m * n; }
  long long constraint_count() const { return lp_constraint_count() + prodcon_count(); }
  long long variable_count() const {
    long long b = static_cast<long long>(n) * m;
    long long x = static_cast<long long>(m) * (m - 1) / 2;
    long long p = static_cast<long long>(n) * m * (m + 1) / 2;
    return b + x + p;
  }
};

IlpInstance build_ilp(const Graph& h_tilde);

struct BnbOptions {
  double time_limit_s = 60.0;
};

/// Exact solver for the binary program. Work is split per connected component
/// of h_tilde; within a component, flip variables are decided in the same
/// removal-first order as solve_enumeration (0 before 1) under an iteratively
/// deepened flip budget, and B columns are assigned as row pairs with
/// column-sum and product-constraint propagation. Row permutation symmetry is
/// broken by requiring fresh rows to appear in index order. Both engines
/// therefore return identical flip sets, not just equal objectives. If the
/// time limit expires, the best incumbent is returned with
/// stats.proved_optimal = false.
PseudoInverseSolution solve_branch_and_bound(const IlpInstance& inst, const BnbOptions& opts = {});

/// Recomputes the factorization from g_hat and checks the model identity
/// entrywise over the integers, along with flip tags, the flipped graph, and
/// line-graph membership of h_hat. On failure, *diag explains the mismatch.
bool verify_solution(const Graph& h_tilde, const PseudoInverseSolution& sol,
                     std::string* diag = nullptr);

/// CPLEX-style LP file with one c_{i}_{j} constraint per ordered pair and two
/// product constraints per ordered pair and row. Mirrored pairs share
/// variables, so the file restates symmetric constraints verbatim.
void export_lp(const IlpInstance& inst, std::ostream& out);
void export_lp(const IlpInstance& inst, const std::string& path);

}  // namespace lineinv
