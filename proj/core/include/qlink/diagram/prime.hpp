#pragma once

#include <optional>
#include <utility>

#include "qlink/diagram/link_diagram.hpp"

namespace qlink {

// A pair of arcs whose removal splits the diagram into two pieces that both
// contain crossings, if any.
std::optional<std::pair<int, int>> find_two_cut(const LinkDiagram& d);
bool is_prime(const LinkDiagram& d);
// Connected sum at arc a of d1 and arc b of d2 (orientation preserving).
LinkDiagram connected_sum(const LinkDiagram& d1, int arc1, const LinkDiagram& d2, int arc2);

}  // namespace qlink
