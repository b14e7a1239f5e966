#include "qlink/diagram/prime.hpp"

#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

// Pieces of the crossing graph when the arcs flagged in cut are removed.
int pieces_without(const LinkDiagram& d, const std::vector<int>& partner, int cut1, int cut2) {
  const int n = d.crossing_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  int pieces = n;
  for (int x = 0; x < 4 * n; ++x) {
    const int a = d.crossings[x / 4].arcs[x % 4];
    if (a == cut1 || a == cut2) continue;
    const int u = find(x / 4), v = find(partner[x] / 4);
    if (u != v) {
      p[u] = v;
      --pieces;
    }
  }
  return pieces;
}

}  // namespace

std::optional<std::pair<int, int>> find_two_cut(const LinkDiagram& d) {
  if (d.crossing_count() < 2) return std::nullopt;
  const auto partner = dart_partner(d);
  if (pieces_without(d, partner, -1, -1) != 1) return std::nullopt;
  const int m = d.arc_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (pieces_without(d, partner, a, b) > 1) return std::make_pair(a, b);
  return std::nullopt;
}

bool is_prime(const LinkDiagram& d) { return !find_two_cut(d).has_value(); }

LinkDiagram connected_sum(const LinkDiagram& d1, int arc1, const LinkDiagram& d2, int arc2) {
  if (d2.crossings.empty()) {
    if (d2.free_loops < 1) throw ArgumentError("connected sum with an empty diagram");
    LinkDiagram r = d1;
    r.free_loops += d2.free_loops - 1;
    return r;
  }
  if (d1.crossings.empty()) return connected_sum(d2, arc2, d1, arc1);
  if (arc1 < 0 || arc1 >= d1.arc_count() || arc2 < 0 || arc2 >= d2.arc_count())
    throw ArgumentError("connected sum arc out of range");
  LinkDiagram r = disjoint_union(d1, d2);
  const int shift = d1.arc_count();
  const int b = arc2 + shift;
  const int n1 = d1.crossing_count();
  // the head of each cut arc is its incoming slot; swap the heads
  auto is_in = [](const Crossing& x, int k) { return k == 0 || k == x.over_in(); };
  for (int c = 0; c < r.crossing_count(); ++c) {
    Crossing& x = r.crossings[c];
    for (int k = 0; k < 4; ++k) {
      if (!is_in(x, k)) continue;
      if (c < n1 && x.arcs[k] == arc1) x.arcs[k] = b;
      else if (c >= n1 && x.arcs[k] == b) x.arcs[k] = arc1;
    }
  }
  r.twist_reduced = false;
  require_valid(r);
  return relabel_canonical(r);
}

}  // namespace qlink
