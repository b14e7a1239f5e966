#pragma once

#include <string>

#include "qlink/graphmodel/graph.hpp"
#include "qlink/graphmodel/paths.hpp"

namespace qlink {

struct FullTwistSearch {
  bool bounded = false;
  int m = 0;
  MultiTwistProfile at_m;
  std::string diagnosis;
};

// Smallest m >= 0 for which adding m full twists to every positive edge makes
// omega / t > |r| R hold.
FullTwistSearch find_full_twists(const WeightedPlanarGraph& g, int search_cap = 1 << 20);

}  // namespace qlink
