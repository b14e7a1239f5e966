#pragma once

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/diagram/states.hpp"

namespace qlink {

struct SurfaceReport {
  int boundary_slope = 0;
  int euler_char = 0;
  int boundary_components = 0;
  int circles = 0;
  int b_on_positive = 0;  // positive crossings resolved B
  int a_on_negative = 0;  // negative crossings resolved A
};

// Slope 2 c+^B - 2 c-^A and Euler characteristic |s| - c of the state surface.
SurfaceReport surface_report(const LinkDiagram& d, const KauffmanState& s);

}  // namespace qlink
