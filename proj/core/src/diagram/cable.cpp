#include "qlink/diagram/cable.hpp"

#include <algorithm>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

LinkDiagram remove_components_mapped(const LinkDiagram& d, const std::vector<int>& comps,
                          std::vector<int>& old_to_new) {
  ComponentInfo info = components(d);
  const int crossing_comps = static_cast<int>(info.arcs.size());
  std::vector<char> drop(info.count, 0);
  for (int c : comps) {
    if (c < 0 || c >= info.count) throw ArgumentError("no component " + std::to_string(c));
    drop[c] = 1;
  }
  const int m = d.arc_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> keep_crossing(d.crossing_count(), 0);
  std::vector<int> survivor_crossings(crossing_comps, 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings[c];
    const int cu = info.arc_component[x.arcs[0]];
    const int co = info.arc_component[x.arcs[1]];
    if (!drop[cu] && !drop[co]) {
      keep_crossing[c] = 1;
      ++survivor_crossings[cu];
      ++survivor_crossings[co];
      continue;
    }
    // the surviving strand passes straight through the removed one
    if (!drop[cu]) parent[find(x.arcs[0])] = find(x.arcs[2]);
    if (!drop[co]) parent[find(x.arcs[1])] = find(x.arcs[3]);
  }
  LinkDiagram r;
  std::vector<int> label(m, -1);
  std::vector<int> label_comp;
  int next = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (!keep_crossing[c]) continue;
    Crossing x = d.crossings[c];
    for (int& a : x.arcs) {
      const int root = find(a);
      if (label[root] < 0) {
        label[root] = next++;
        label_comp.push_back(info.arc_component[root]);
      }
      a = label[root];
    }
    r.crossings.push_back(x);
  }
  r.twist_reduced = d.twist_reduced;
  ComponentInfo ri = components(r);
  old_to_new.assign(info.count, -1);
  for (int i = 0; i < static_cast<int>(ri.arcs.size()); ++i)
    old_to_new[label_comp[ri.arcs[i][0]]] = i;
  int loop_index = static_cast<int>(ri.arcs.size());
  for (int i = 0; i < crossing_comps; ++i)
    if (!drop[i] && survivor_crossings[i] == 0) {
      old_to_new[i] = loop_index++;
      ++r.free_loops;
    }
  for (int i = crossing_comps; i < info.count; ++i)
    if (!drop[i]) {
      old_to_new[i] = loop_index++;
      ++r.free_loops;
    }
  return r;
}

LinkDiagram remove_components(const LinkDiagram& d, const std::vector<int>& comps) {
  std::vector<int> map;
  return remove_components_mapped(d, comps, map);
}

CableResult cable_components(const LinkDiagram& d, const std::vector<int>& mult) {
  ComponentInfo info = components(d);
  if (static_cast<int>(mult.size()) != info.count)
    throw ArgumentError("cable needs one multiplicity per component");
  for (int j : mult)
    if (j < 0) throw ArgumentError("cable multiplicity must be >= 0");
  std::vector<int> zero;
  for (int i = 0; i < info.count; ++i)
    if (mult[i] == 0) zero.push_back(i);
  if (!zero.empty()) {
    std::vector<int> old_to_new;
    LinkDiagram rest = remove_components_mapped(d, zero, old_to_new);
    std::vector<int> rest_mult(component_count(rest), 0);
    for (int i = 0; i < info.count; ++i)
      if (old_to_new[i] >= 0) rest_mult[old_to_new[i]] = mult[i];
    CableResult out = cable_components(rest, rest_mult);
    // slot and grid maps refer to the reduced diagram's crossings
    return out;
  }

  CableResult out;
  const int n = d.crossing_count();
  std::vector<int> arc_mult(d.arc_count());
  for (int a = 0; a < d.arc_count(); ++a) arc_mult[a] = mult[info.arc_component[a]];
  std::vector<int> ext_base(d.arc_count() + 1, 0);
  for (int a = 0; a < d.arc_count(); ++a) ext_base[a + 1] = ext_base[a] + arc_mult[a];
  int next_label = ext_base[d.arc_count()];
  auto ext = [&](int a, int k) { return ext_base[a] + k; };

  out.slot_arcs.resize(n);
  out.grid.resize(n);
  LinkDiagram& r = out.diagram;
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings[c];
    const int ju = arc_mult[x.arcs[0]];
    const int jo = arc_mult[x.arcs[1]];
    const int base = r.crossing_count();
    r.crossings.resize(base + ju * jo);
    auto at = [&](int k, int col) -> Crossing& { return r.crossings[base + k * jo + col]; };
    auto over_copy = [&](int col) { return x.sign > 0 ? col : jo - 1 - col; };
    for (int k = 0; k < ju; ++k)
      for (int col = 0; col < jo; ++col) {
        at(k, col).sign = x.sign;
        out.grid[c].push_back(base + k * jo + col);
      }
    // slots of a grid crossing: 0 west, 1 south, 2 east, 3 north
    for (int k = 0; k < ju; ++k) {
      at(k, 0).arcs[0] = ext(x.arcs[0], k);
      at(k, jo - 1).arcs[2] = ext(x.arcs[2], k);
      for (int col = 0; col + 1 < jo; ++col) {
        const int l = next_label++;
        at(k, col).arcs[2] = l;
        at(k, col + 1).arcs[0] = l;
      }
    }
    for (int col = 0; col < jo; ++col) {
      at(0, col).arcs[1] = ext(x.arcs[1], over_copy(col));
      at(ju - 1, col).arcs[3] = ext(x.arcs[3], over_copy(col));
      for (int k = 0; k + 1 < ju; ++k) {
        const int l = next_label++;
        at(k, col).arcs[3] = l;
        at(k + 1, col).arcs[1] = l;
      }
    }
    auto& sa = out.slot_arcs[c];
    for (int k = ju - 1; k >= 0; --k) sa[0].push_back(ext(x.arcs[0], k));
    for (int col = 0; col < jo; ++col) sa[1].push_back(ext(x.arcs[1], over_copy(col)));
    for (int k = 0; k < ju; ++k) sa[2].push_back(ext(x.arcs[2], k));
    for (int col = jo - 1; col >= 0; --col) sa[3].push_back(ext(x.arcs[3], over_copy(col)));
  }
  const int cc = static_cast<int>(info.arcs.size());
  for (int i = cc; i < info.count; ++i) r.free_loops += mult[i];
  if (next_label != r.arc_count()) throw ConsistencyError("cable arc count mismatch");
  require_valid(r);
  return out;
}

LinkDiagram cable(const LinkDiagram& d, int j) {
  if (j < 0) throw ArgumentError("cable multiplicity must be >= 0");
  return cable_components(d, std::vector<int>(component_count(d), j)).diagram;
}

}  // namespace qlink
