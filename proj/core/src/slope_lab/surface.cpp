#include "qlink/slope_lab/surface.hpp"

namespace qlink {

SurfaceReport surface_report(const LinkDiagram& d, const KauffmanState& s) {
  SurfaceReport r;
  const auto g = resolve(d, s);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int sign = d.crossings[c].sign;
    if (sign > 0 && s.choice[c] == Smoothing::B) ++r.b_on_positive;
    if (sign < 0 && s.choice[c] == Smoothing::A) ++r.a_on_negative;
  }
  r.boundary_slope = 2 * r.b_on_positive - 2 * r.a_on_negative;
  r.circles = g.circles;
  r.euler_char = g.circles - d.crossing_count();
  r.boundary_components = component_count(d);
  return r;
}

}  // namespace qlink
