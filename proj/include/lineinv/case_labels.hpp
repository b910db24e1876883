#pragma once

namespace lineinv {

/// Outcome classes for a perturbed line graph, by how the minimal repair
/// relates to the original: I = no repair needed, II = the perturbation is
/// undone up to isomorphism, III = a different single edge is removed,
/// IV = an edge is added instead. DelGroup/AddGroup are the multi-edge
/// analogues of III/IV.
enum class CaseLabel { I, II, III, IV, DelGroup, AddGroup };

/// Serialized forms used in CSV output: I, II, III, IV, DEL, ADD.
const char* case_label_name(CaseLabel label);

enum class MechanismLabel {
  RelocateEdge,
  MergeVertices,
  MergeAndSplit,
  TriangleClosing,
  Undetermined,
};

const char* mechanism_name(MechanismLabel label);

}  // namespace lineinv
