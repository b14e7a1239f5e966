#pragma once

#include <array>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"

namespace qlink {

struct CableResult {
  LinkDiagram diagram;
  // For each original crossing and slot, the cable arcs met counterclockwise
  // around that crossing's grid on that side.
  std::vector<std::array<std::vector<int>, 4>> slot_arcs;
  // Cable crossings produced from each original crossing.
  std::vector<std::vector<int>> grid;
};

// Blackboard cable with multiplicity mult[i] on component i.
CableResult cable_components(const LinkDiagram& d, const std::vector<int>& mult);
LinkDiagram cable(const LinkDiagram& d, int j);
// Drops the listed components, merging the arcs that passed through them.
LinkDiagram remove_components(const LinkDiagram& d, const std::vector<int>& comps);
// Same, also reporting each old component's index in the result (-1 if removed).
LinkDiagram remove_components_mapped(const LinkDiagram& d, const std::vector<int>& comps,
                                     std::vector<int>& old_to_new);

}  // namespace qlink
