#pragma once

#include <vector>

#include "qlink/diagram/link_diagram.hpp"

namespace qlink {

struct MurasugiResult {
  LinkDiagram diagram;
  int circle1 = 0, circle2 = 0;
  int arc1 = 0, arc2 = 0;  // arcs spliced to form the gluing disk
  int circles1 = 0, circles2 = 0, circles = 0;
  std::vector<int> loops_per_circle1;  // one-edged loop census of s_A(D1)
};

// Circles of s_A(d) that carry no one-edged loop.
std::vector<int> eligible_circles(const LinkDiagram& d);

// Glues the all-A state graphs of d1 and d2 at circle1 and circle2 by
// splicing an arc of each circle; no crossings are created.
MurasugiResult murasugi_sum(const LinkDiagram& d1, int circle1, const LinkDiagram& d2,
                            int circle2);

}  // namespace qlink
