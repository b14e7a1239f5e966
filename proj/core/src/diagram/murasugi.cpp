#include "qlink/diagram/murasugi.hpp"

#include "qlink/diagram/prime.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/errors.hpp"

namespace qlink {

std::vector<int> eligible_circles(const LinkDiagram& d) {
  const auto s = resolve(d, KauffmanState::all(d, Smoothing::A));
  std::vector<int> out;
  for (int i = 0; i < s.circles; ++i)
    if (s.loops_at_circle[i] == 0) out.push_back(i);
  return out;
}

namespace {

int arc_on_circle(const StateGraphSummary& s, int circle) {
  for (int a = 0; a < static_cast<int>(s.arc_circle.size()); ++a)
    if (s.arc_circle[a] == circle) return a;
  return -1;
}

}  // namespace

MurasugiResult murasugi_sum(const LinkDiagram& d1, int circle1, const LinkDiagram& d2,
                            int circle2) {
  const auto s1 = resolve(d1, KauffmanState::all(d1, Smoothing::A));
  const auto s2 = resolve(d2, KauffmanState::all(d2, Smoothing::A));
  if (circle1 < 0 || circle1 >= s1.circles)
    throw ArgumentError("no circle " + std::to_string(circle1) + " in the first diagram");
  if (circle2 < 0 || circle2 >= s2.circles)
    throw ArgumentError("no circle " + std::to_string(circle2) + " in the second diagram");
  if (s1.loops_at_circle[circle1] != 0)
    throw HypothesisError("circle " + std::to_string(circle1) + " carries a one-edged loop");
  MurasugiResult r;
  r.circle1 = circle1;
  r.circle2 = circle2;
  r.circles1 = s1.circles;
  r.circles2 = s2.circles;
  r.loops_per_circle1 = s1.loops_at_circle;
  r.arc1 = arc_on_circle(s1, circle1);
  r.arc2 = arc_on_circle(s2, circle2);
  // a free loop circle has no arc; the sum then just absorbs it
  if (r.arc1 < 0 && r.arc2 < 0) {
    r.diagram = disjoint_union(d1, d2);
    r.diagram.free_loops -= 1;
  } else if (r.arc2 < 0) {
    r.diagram = d1;
    r.diagram.free_loops += d2.free_loops - 1;
    if (!d2.crossings.empty())
      throw ArgumentError("gluing along a free loop of a diagram with crossings");
  } else if (r.arc1 < 0) {
    if (!d1.crossings.empty())
      throw ArgumentError("gluing along a free loop of a diagram with crossings");
    r.diagram = d2;
    r.diagram.free_loops += d1.free_loops - 1;
  } else {
    r.diagram = connected_sum(d1, r.arc1, d2, r.arc2);
  }
  r.circles = circle_count(r.diagram, KauffmanState::all(r.diagram, Smoothing::A));
  if (r.circles != r.circles1 + r.circles2 - 1)
    throw ConsistencyError("state circles did not glue");
  return r;
}

}  // namespace qlink
