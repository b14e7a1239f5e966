#include "qlink/diagram/link_diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qlink/diagram/twist.hpp"
#include "qlink/errors.hpp"

namespace qlink {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

bool slot_incoming(const Crossing& x, int slot) { return slot == 0 || slot == x.over_in(); }

}  // namespace

std::vector<int> dart_partner(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<int> first(d.arc_count(), -1);
  std::vector<int> partner(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      const int a = d.crossings[c].arcs[k];
      if (a < 0 || a >= d.arc_count())
        throw StructuralError("arc label " + std::to_string(a) + " out of range");
      const int dart = 4 * c + k;
      if (first[a] < 0) {
        first[a] = dart;
      } else {
        if (partner[first[a]] >= 0) throw StructuralError("arc label used more than twice");
        partner[first[a]] = dart;
        partner[dart] = first[a];
      }
    }
  }
  for (int x : partner)
    if (x < 0) throw StructuralError("arc label used only once");
  return partner;
}

namespace {

std::vector<std::vector<int>> faces_from_partner(const std::vector<int>& partner) {
  const int darts = static_cast<int>(partner.size());
  std::vector<char> used(darts, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < darts; ++start) {
    if (used[start]) continue;
    std::vector<int> face;
    int x = start;
    do {
      used[x] = 1;
      face.push_back(x);
      const int c = x / 4;
      x = partner[4 * c + (x % 4 + 1) % 4];
    } while (x != start);
    out.push_back(std::move(face));
  }
  return out;
}

int map_components_of(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size()) / 4;
  UnionFind uf(n);
  for (int x = 0; x < 4 * n; ++x) uf.unite(x / 4, partner[x] / 4);
  int k = 0;
  for (int c = 0; c < n; ++c) k += uf.find(c) == c;
  return k;
}

}  // namespace

std::vector<std::vector<int>> diagram_faces(const LinkDiagram& d) {
  return faces_from_partner(dart_partner(d));
}

std::vector<std::vector<int>> projection_faces(const PlanarProjection& p) {
  return faces_from_partner(p.partner);
}

DiagramCheck check_diagram(const LinkDiagram& d) {
  DiagramCheck r;
  std::vector<int> partner;
  try {
    partner = dart_partner(d);
  } catch (const Error& e) {
    r.problem = e.what();
    return r;
  }
  r.labels_ok = true;
  r.orientation_ok = true;
  for (int x = 0; x < static_cast<int>(partner.size()); ++x) {
    const bool in_x = slot_incoming(d.crossings[x / 4], x % 4);
    const int y = partner[x];
    const bool in_y = slot_incoming(d.crossings[y / 4], y % 4);
    if (in_x == in_y) {
      r.orientation_ok = false;
      r.problem = "arc " + std::to_string(d.crossings[x / 4].arcs[x % 4]) +
                  " is not oriented consistently";
      break;
    }
  }
  for (const auto& x : d.crossings)
    if (x.sign != 1 && x.sign != -1) {
      r.orientation_ok = false;
      r.problem = "crossing sign must be +1 or -1";
    }
  const int n = d.crossing_count();
  r.map_components = map_components_of(partner);
  const int f = static_cast<int>(faces_from_partner(partner).size());
  r.planar = n - 2 * n + f == 2 * r.map_components;
  r.connected = r.map_components + d.free_loops <= 1;
  if (!r.planar && r.problem.empty()) r.problem = "diagram is not planar (Euler check)";
  return r;
}

void require_valid(const LinkDiagram& d) {
  DiagramCheck r = check_diagram(d);
  if (!r.labels_ok || !r.orientation_ok || !r.planar) throw StructuralError(r.problem);
}

ComponentInfo components(const LinkDiagram& d) {
  const int m = d.arc_count();
  // next arc along the orientation: the arc leaving the crossing entered
  std::vector<int> next(m, -1);
  for (const auto& x : d.crossings) {
    next[x.arcs[0]] = x.arcs[2];
    next[x.arcs[x.over_in()]] = x.arcs[x.over_out()];
  }
  ComponentInfo info;
  info.arc_component.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    if (info.arc_component[a] >= 0) continue;
    std::vector<int> seq;
    int x = a;
    while (info.arc_component[x] < 0) {
      info.arc_component[x] = static_cast<int>(info.arcs.size());
      seq.push_back(x);
      x = next[x];
      if (x < 0) throw StructuralError("broken component traversal");
    }
    info.arcs.push_back(std::move(seq));
  }
  info.count = static_cast<int>(info.arcs.size()) + d.free_loops;
  return info;
}

int component_count(const LinkDiagram& d) { return components(d).count; }

int split_pieces(const LinkDiagram& d) {
  if (d.crossings.empty()) return d.free_loops;
  return map_components_of(dart_partner(d)) + d.free_loops;
}

PlanarProjection to_projection(const LinkDiagram& d) {
  PlanarProjection p;
  p.partner = dart_partner(d);
  p.under.assign(d.crossing_count(), 0);
  p.free_loops = d.free_loops;
  return p;
}

LinkDiagram orient(const PlanarProjection& p) {
  const int n = p.crossing_count();
  std::vector<int> label(4 * n, -1);
  std::vector<char> incoming(4 * n, 0);
  int next_label = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (label[start] >= 0) continue;
    int out = start;
    while (label[out] < 0) {
      const int in = p.partner[out];
      label[out] = label[in] = next_label++;
      incoming[in] = 1;
      out = 4 * (in / 4) + (in % 4 + 2) % 4;
    }
  }
  LinkDiagram d;
  d.free_loops = p.free_loops;
  d.crossings.resize(n);
  for (int c = 0; c < n; ++c) {
    const int u = p.under[c];
    const int in_u = incoming[4 * c + u] ? u : (u + 2) % 4;
    const int in_o = incoming[4 * c + (u + 1) % 4] ? (u + 1) % 4 : (u + 3) % 4;
    Crossing& x = d.crossings[c];
    for (int k = 0; k < 4; ++k) x.arcs[k] = label[4 * c + (in_u + k) % 4];
    x.sign = in_o == (in_u + 3) % 4 ? 1 : -1;
  }
  return d;
}

namespace {

Crossing switched(const Crossing& x) {
  Crossing y;
  const int o = x.over_in();
  for (int k = 0; k < 4; ++k) y.arcs[k] = x.arcs[(o + k) % 4];
  y.sign = -x.sign;
  return y;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (auto& x : r.crossings) x = switched(x);
  return r;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
  LinkDiagram r = d;
  r.crossings.at(c) = switched(d.crossings.at(c));
  return r;
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  ComponentInfo info = components(d);
  if (component < 0 || component >= info.count)
    throw ArgumentError("no component " + std::to_string(component));
  if (component >= static_cast<int>(info.arcs.size())) return d;  // free loop
  LinkDiagram r = d;
  for (auto& x : r.crossings) {
    const bool ru = info.arc_component[x.arcs[0]] == component;
    const bool ro = info.arc_component[x.arcs[1]] == component;
    if (ru) {
      const auto old = x.arcs;
      for (int k = 0; k < 4; ++k) x.arcs[k] = old[(k + 2) % 4];
    }
    if (ru != ro) x.sign = -x.sign;
  }
  return r;
}

LinkDiagram apply_orientation(const LinkDiagram& d, const std::vector<int>& signs) {
  LinkDiagram r = d;
  for (int i = 0; i < static_cast<int>(signs.size()); ++i)
    if (signs[i] < 0) r = reverse_component(r, i);
  return r;
}

LinkDiagram relabel_canonical(const LinkDiagram& d) {
  ComponentInfo info = components(d);
  std::vector<int> fresh(d.arc_count(), -1);
  int next = 0;
  for (const auto& seq : info.arcs)
    for (int a : seq) fresh[a] = next++;
  LinkDiagram r = d;
  for (auto& x : r.crossings)
    for (int& a : x.arcs) a = fresh[a];
  return r;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram r = a;
  const int shift = a.arc_count();
  for (auto x : b.crossings) {
    for (int& l : x.arcs) l += shift;
    r.crossings.push_back(x);
  }
  r.free_loops = a.free_loops + b.free_loops;
  return r;
}

CrossingCounts counts(const LinkDiagram& d) {
  CrossingCounts k;
  k.c = d.crossing_count();
  for (const auto& x : d.crossings) (x.sign > 0 ? k.c_pos : k.c_neg)++;
  k.writhe = k.c_pos - k.c_neg;
  for (const auto& r : twist_regions(d)) k.region_sizes.push_back(r.size());
  std::sort(k.region_sizes.begin(), k.region_sizes.end());
  k.tw = static_cast<int>(k.region_sizes.size());
  return k;
}

namespace {

LinkDiagram from_list(std::vector<std::pair<std::array<int, 4>, int>> xs, int base) {
  LinkDiagram d;
  for (auto& [arcs, s] : xs) {
    Crossing x;
    for (int k = 0; k < 4; ++k) x.arcs[k] = arcs[k] - base;
    x.sign = s;
    d.crossings.push_back(x);
  }
  require_valid(d);
  return d;
}

}  // namespace

LinkDiagram unknot_diagram() {
  LinkDiagram d;
  d.free_loops = 1;
  return d;
}

LinkDiagram positive_trefoil() {
  return from_list({{{1, 5, 2, 4}, 1}, {{3, 1, 4, 6}, 1}, {{5, 3, 6, 2}, 1}}, 1);
}

LinkDiagram kinked_unknot(int sign) {
  if (sign > 0) return from_list({{{0, 0, 1, 1}, 1}}, 0);
  return from_list({{{0, 1, 1, 0}, -1}}, 0);
}

LinkDiagram hopf_link(int sign) {
  LinkDiagram neg = from_list({{{4, 1, 3, 2}, -1}, {{2, 3, 1, 4}, -1}}, 1);
  return sign < 0 ? neg : mirror(neg);
}

LinkDiagram figure_eight() {
  return from_list({{{4, 2, 5, 1}, 1}, {{8, 6, 1, 5}, 1}, {{6, 3, 7, 4}, -1}, {{2, 7, 3, 8}, -1}},
                   1);
}

}  // namespace qlink
