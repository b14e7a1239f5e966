#pragma once

#include <vector>

#include "qlink/diagram/link_diagram.hpp"

namespace qlink {

struct TwistRegion {
  std::vector<int> crossings;  // chain order when the region is a chain
  int sign = 0;                // 0 when the crossings disagree
  int size() const { return static_cast<int>(crossings.size()); }
  bool chain = false;          // bigons at opposite corners, end to end
  bool cyclic = false;
  // For chains: corner of each crossing facing the next crossing.
  std::vector<int> top_corner;
};

// Crossings joined by alternating bigons form a region; isolated crossings
// form singleton regions. Regions are ordered by smallest crossing.
std::vector<TwistRegion> twist_regions(const LinkDiagram& d);

// Heuristic for the declared twist-reduced flag: pairs of distinct regions
// joined by two different arcs.
std::vector<std::pair<int, int>> twist_reduction_warnings(const LinkDiagram& d);

}  // namespace qlink
