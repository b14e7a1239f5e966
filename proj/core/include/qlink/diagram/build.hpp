#pragma once

#include <map>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/graphmodel/graph.hpp"

namespace qlink {

struct BuiltDiagram {
  LinkDiagram diagram;
  // crossings of each edge's twisted band, from end 0 to end 1
  std::map<int, std::vector<int>> edge_crossings;
};

// D = boundary of the surface made of one disk per vertex and one twisted
// band of |w| half-twists per edge (right-handed for w > 0).
BuiltDiagram build_diagram_with_map(const WeightedPlanarGraph& g);
LinkDiagram build_diagram(const WeightedPlanarGraph& g);

// B on the crossings of every negative edge, A elsewhere.
KauffmanState pretzel_state(const BuiltDiagram& b, const WeightedPlanarGraph& g);

}  // namespace qlink
