#include "qlink/diagram/states.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qlink/errors.hpp"

namespace qlink {

int KauffmanState::count(Smoothing s) const {
  return static_cast<int>(std::count(choice.begin(), choice.end(), s));
}

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

}  // namespace

StateGraphSummary resolve(const LinkDiagram& d, const KauffmanState& s) {
  if (static_cast<int>(s.choice.size()) != d.crossing_count())
    throw ArgumentError("state does not assign every crossing");
  const int m = d.arc_count();
  UnionFind uf(m);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings[c];
    for (auto [p, q] : smoothing_pairs(s.choice[c])) uf.unite(x.arcs[p], x.arcs[q]);
  }
  StateGraphSummary r;
  std::vector<int> id(m, -1);
  r.arc_circle.assign(m, -1);
  int circles = 0;
  for (int a = 0; a < m; ++a) {
    const int root = uf.find(a);
    if (id[root] < 0) id[root] = circles++;
    r.arc_circle[a] = id[root];
  }
  r.circles = circles + d.free_loops;
  r.loops_at_circle.assign(r.circles, 0);
  std::set<std::pair<int, int>> distinct;
  UnionFind comp(r.circles);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings[c];
    auto pairs = smoothing_pairs(s.choice[c]);
    int u = r.arc_circle[x.arcs[pairs[0].first]];
    int w = r.arc_circle[x.arcs[pairs[1].first]];
    if (u > w) std::swap(u, w);
    r.edges.emplace_back(u, w);
    distinct.emplace(u, w);
    comp.unite(u, w);
    if (u == w) {
      r.one_edged_loops.push_back(c);
      ++r.loops_at_circle[u];
    }
  }
  r.reduced.assign(distinct.begin(), distinct.end());
  r.reduced_edges = static_cast<int>(r.reduced.size());
  for (int v = 0; v < r.circles; ++v) r.graph_components += comp.find(v) == v;
  r.betti1 = r.reduced_edges - r.circles + r.graph_components;
  return r;
}

int circle_count(const LinkDiagram& d, const KauffmanState& s) {
  return resolve(d, s).circles;
}

Adequacy adequacy(const LinkDiagram& d) {
  Adequacy a;
  a.a_adequate = resolve(d, KauffmanState::all(d, Smoothing::A)).one_edged_loops.empty();
  a.b_adequate = resolve(d, KauffmanState::all(d, Smoothing::B)).one_edged_loops.empty();
  return a;
}

}  // namespace qlink
