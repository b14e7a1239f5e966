#pragma once

#include <array>
#include <string>
#include <vector>

namespace qlink {

// One crossing in PD form: arc labels counterclockwise starting at the
// incoming under-strand. sign is +1 when the over-strand runs from slot 3 to
// slot 1, -1 when it runs from slot 1 to slot 3.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  int over_in() const { return sign > 0 ? 3 : 1; }
  int over_out() const { return sign > 0 ? 1 : 3; }
};

// Oriented link diagram. Arc labels are 0..arc_count()-1; crossingless
// components are counted by free_loops and own the highest labels.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  bool twist_reduced = false;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int arc_count() const { return 2 * crossing_count(); }
};

// Unoriented 4-valent planar map with over/under data. Darts are 4*c + k for
// counterclockwise position k at crossing c; positions under and under+2 form
// the under-strand.
struct PlanarProjection {
  std::vector<int> partner;
  std::vector<int> under;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(under.size()); }
};

struct DiagramCheck {
  bool labels_ok = false;
  bool orientation_ok = false;
  bool planar = false;
  bool connected = false;
  int map_components = 0;
  std::string problem;
};

DiagramCheck check_diagram(const LinkDiagram& d);
// Throws StructuralError when labels or orientations are inconsistent.
void require_valid(const LinkDiagram& d);

// partner[4c+k] = dart at the other end of the arc leaving slot k of c.
std::vector<int> dart_partner(const LinkDiagram& d);
// Orbits of corners; corner 4c+k lies between slots k and k+1.
std::vector<std::vector<int>> diagram_faces(const LinkDiagram& d);
std::vector<std::vector<int>> projection_faces(const PlanarProjection& p);

struct ComponentInfo {
  std::vector<int> arc_component;  // component index per arc
  std::vector<std::vector<int>> arcs;  // arcs of each crossing component in order
  int count = 0;                   // including free loops
};
ComponentInfo components(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
// Number of connected pieces of the underlying 4-valent map plus free loops.
int split_pieces(const LinkDiagram& d);

PlanarProjection to_projection(const LinkDiagram& d);
// Orients each component canonically: components in order of their smallest
// dart, leaving along that dart, arcs numbered in traversal order.
LinkDiagram orient(const PlanarProjection& p);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram switch_crossing(const LinkDiagram& d, int c);
LinkDiagram reverse_component(const LinkDiagram& d, int component);
// Applies --orient style overrides: signs[i] < 0 reverses component i.
LinkDiagram apply_orientation(const LinkDiagram& d, const std::vector<int>& signs);
// Renumbers arcs into canonical traversal order without changing orientation.
LinkDiagram relabel_canonical(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

struct CrossingCounts {
  int c = 0, c_pos = 0, c_neg = 0, writhe = 0;
  int tw = 0;
  std::vector<int> region_sizes;  // sorted ascending
};
CrossingCounts counts(const LinkDiagram& d);

// Small named diagrams used across tests and the CLI.
LinkDiagram unknot_diagram();
LinkDiagram positive_trefoil();
LinkDiagram kinked_unknot(int sign);
LinkDiagram hopf_link(int sign);
LinkDiagram figure_eight();

}  // namespace qlink
