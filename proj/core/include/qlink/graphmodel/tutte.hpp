#pragma once

#include <utility>
#include <vector>

#include "qlink/qalgebra/bilaurent.hpp"

namespace qlink {

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

inline constexpr int kTutteEdgeCap = 14;

// Tutte polynomial in (x, y) by deletion-contraction.
BiLaurentPoly tutte_polynomial(const Multigraph& g, int edge_cap = kTutteEdgeCap);

}  // namespace qlink
