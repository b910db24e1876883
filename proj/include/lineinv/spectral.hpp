#pragma once

#include <string>
#include <vector>

#include "lineinv/case_labels.hpp"
#include "lineinv/graph.hpp"
#include "lineinv/pseudo_inverse.hpp"

namespace lineinv {

struct SpectralReport {
  double radius = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

/// Largest adjacency eigenvalue, which for a graph equals the spectral
/// radius. Power iteration on A + dI (d = maximum degree) from the all-ones
/// vector; the shift makes the dominant eigenvalue simple-signed so bipartite
/// graphs converge too. Stops when ||Ax - radius*x|| <= tol, which bounds the
/// eigenvalue error by tol for symmetric matrices.
SpectralReport spectral_radius(const Graph& g, double tol = 1e-10);

/// Connected with spectral radius at most 2 + tol (paths, cycles, and the
/// handful of tree exceptions).
bool is_smith(const Graph& g, double tol = 1e-9);

struct BoundReport {
  std::string bound_name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

/// CSV row "bound_name,lhs,rhs,satisfied".
std::string bound_report_csv(const BoundReport& report);

/// ||root(h)|| <= 2||h|| for line graphs h. Requires ||h|| >= 2 (below that
/// the factor-2 bound has no derivation and radius-2 graphs sit exactly on
/// it), otherwise SmithGraphExcluded.
BoundReport check_root_bound(const Graph& h, double tol = 1e-9);

/// ||g_hat|| <= 3||h_tilde|| for a verified repair. Solutions that add an
/// edge need ||h_tilde|| >= 2; pure removals need ||h_tilde|| >= 1. Below
/// those thresholds SmithGraphExcluded is raised.
BoundReport check_pseudo_bound(const Graph& h_tilde, const PseudoInverseSolution& sol,
                               double tol = 1e-9);

/// Per-case spectral-shift bounds for a single-edge perturbation:
///   I:   |dH| <= 1          (case_I_ratio)
///   II:  dH = dG = 0        (case_II_equal, lhs = max of the two deltas)
///   III: |dH| <= 1, |dG| <= 2
///   IV:  0 < dH <= 2
/// where dH = ||h_hat|| - ||h|| and dG = ||g_hat|| - ||g||. Multi-edge labels
/// have no per-case bound and yield an empty list; an out-of-enum label is
/// UnknownCase.
std::vector<BoundReport> case_bound_report(const Graph& g, const Graph& g_hat, const Graph& h,
                                           const Graph& h_hat, CaseLabel label,
                                           double tol = 1e-9);

}  // namespace lineinv
