#pragma once

#include <numeric>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/graphmodel/graph.hpp"
#include "qlink/graphmodel/tutte.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink::testing {

// circles of a state by walking arcs through the smoothings
inline int circles_by_walk(const LinkDiagram& d, const KauffmanState& s) {
  const int arcs = d.arc_count();
  std::vector<int> parent(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int groups = arcs;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& a = d.crossings[c].arcs;
    const bool is_a = s.choice[c] == Smoothing::A;
    const int pairs[2][2] = {{0, is_a ? 1 : 3}, {2, is_a ? 3 : 1}};
    for (const auto& p : pairs) {
      const int x = find(a[p[0]]), y = find(a[p[1]]);
      if (x != y) {
        parent[x] = y;
        --groups;
      }
    }
  }
  return groups + d.free_loops;
}

// Plain state sum: sum over all states of A^{#A - #B} delta^{circles}.
inline LaurentPoly bracket_by_states(const LinkDiagram& d) {
  const int c = d.crossing_count();
  LaurentPoly sum;
  KauffmanState s = KauffmanState::all(d, Smoothing::A);
  for (unsigned long mask = 0; mask < (1UL << c); ++mask) {
    for (int i = 0; i < c; ++i) s.choice[i] = (mask >> i & 1) ? Smoothing::B : Smoothing::A;
    const int b = std::popcount(mask);
    sum += loop_power(circles_by_walk(d, s)).shifted(c - 2 * b);
  }
  return sum;
}

// G with every edge replaced by a path of |w| edges.
inline Multigraph subdivided(const WeightedPlanarGraph& g) {
  Multigraph m{g.vertex_count(), {}};
  for (const GraphEdge& e : g.edges()) {
    int prev = g.vertex_index(e.ends[0]);
    const int last = g.vertex_index(e.ends[1]);
    for (int k = 1; k < std::abs(e.weight); ++k) {
      const int mid = m.vertices++;
      m.edges.emplace_back(prev, mid);
      prev = mid;
    }
    m.edges.emplace_back(prev, last);
  }
  return m;
}

}  // namespace qlink::testing
