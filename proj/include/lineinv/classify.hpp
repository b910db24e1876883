#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lineinv/case_labels.hpp"
#include "lineinv/graph.hpp"
#include "lineinv/pseudo_inverse.hpp"

namespace lineinv {

struct CaseResult {
  CaseLabel label = CaseLabel::I;
  /// Set when a grouped optimum both adds and removes edges.
  bool mixed = false;
};

/// Labels a perturb-then-repair run. `added` is the perturbation that turned h
/// into h_tilde (additions only); `sol` is the minimal repair of h_tilde.
/// Raises InconsistentInputs when h_tilde != h + added.
CaseResult classify_case(const Graph& h, const Graph& h_tilde, const PseudoInverseSolution& sol,
                         const FlipSet& added);

struct MechanismResult {
  MechanismLabel label = MechanismLabel::Undetermined;
  /// For the relocate labels: the witnessing move (from, to).
  std::optional<std::pair<Edge, Edge>> relocation;
  /// For MergeVertices and MergeAndSplit: the merged degree-1 pair.
  std::optional<std::pair<int, int>> merged;
  /// For MergeAndSplit: the degree-2 vertex split after the merge.
  std::optional<int> split_vertex;
};

/// Explains g_hat as a single source-graph operation applied to g, trying
/// vertex merges first, then triangle-closing edge relocations, then general
/// relocations, then merge-followed-by-split. Isomorphic inputs need no
/// operation and return Undetermined.
MechanismResult classify_mechanism(const Graph& g, const Graph& g_hat);

/// Spots (a, c, b) where c has degree 2 and its neighbors a < b are not
/// adjacent: adding (a, b) closes the triangle and keeps h a line graph.
/// Requires h to be a line graph.
std::vector<std::array<int, 3>> triangle_closing_sites(const Graph& h);

}  // namespace lineinv
