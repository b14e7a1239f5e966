#include "qlink/diagram/build.hpp"

#include <cstdlib>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

}  // namespace

BuiltDiagram build_diagram_with_map(const WeightedPlanarGraph& g) {
  g.check_rotation_system();
  BuiltDiagram out;
  PlanarProjection p;
  auto link = [&](int a, int b) {
    p.partner[a] = b;
    p.partner[b] = a;
  };
  // Bands are laid out west (end 0) to east (end 1); positions counterclockwise
  // NW, SW, SE, NE. The under-strand runs NW-SE for right-handed twists.
  std::map<int, std::pair<int, int>> band_ends;  // first and last crossing
  int n = 0;
  for (const auto& e : g.edges()) {
    if (e.weight == 0) throw ArgumentError("edge " + std::to_string(e.id) + " has weight 0");
    const int k = std::abs(e.weight);
    std::vector<int> cs;
    for (int j = 0; j < k; ++j) cs.push_back(n + j);
    out.edge_crossings[e.id] = cs;
    band_ends[e.id] = {n, n + k - 1};
    for (int j = 0; j < k; ++j) p.under.push_back(e.weight > 0 ? kNW : kSW);
    n += k;
  }
  p.partner.assign(4 * n, -1);
  for (const auto& e : g.edges()) {
    const auto& cs = out.edge_crossings[e.id];
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
      link(4 * cs[j] + kNE, 4 * cs[j + 1] + kNW);
      link(4 * cs[j] + kSE, 4 * cs[j + 1] + kSW);
    }
  }
  auto port = [&](const HalfEdge& h, bool left) {
    const auto [first, last] = band_ends.at(h.edge);
    if (h.end == 0) return 4 * first + (left ? kNW : kSW);
    return 4 * last + (left ? kSE : kNE);
  };
  for (const auto& v : g.vertices()) {
    const auto& rot = v.rotation;
    if (rot.empty()) {
      ++p.free_loops;
      continue;
    }
    for (std::size_t i = 0; i < rot.size(); ++i)
      link(port(rot[i], true), port(rot[(i + 1) % rot.size()], false));
  }
  out.diagram = orient(p);
  require_valid(out.diagram);
  return out;
}

LinkDiagram build_diagram(const WeightedPlanarGraph& g) {
  return build_diagram_with_map(g).diagram;
}

KauffmanState pretzel_state(const BuiltDiagram& b, const WeightedPlanarGraph& g) {
  KauffmanState s = KauffmanState::all(b.diagram, Smoothing::A);
  for (const auto& e : g.edges())
    if (e.weight < 0)
      for (int c : b.edge_crossings.at(e.id)) s.choice[c] = Smoothing::B;
  return s;
}

}  // namespace qlink
