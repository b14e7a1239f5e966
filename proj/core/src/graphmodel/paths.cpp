#include "qlink/graphmodel/paths.hpp"

#include <algorithm>
#include <limits>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

long long edge_length(int w, PathLengthMode mode) {
  if (mode == PathLengthMode::kPositiveOnly && w < 0) return 0;
  return std::abs(w) - 2;
}

struct PathSearch {
  const WeightedPlanarGraph& g;
  int skip_edge;
  int target;
  PathLengthMode mode;
  std::int64_t cap;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (edge id, neighbour index)
  std::vector<char> on_path;
  std::vector<int> vstack, estack;
  PathProfile out;

  void run(int source) {
    const int n = g.vertex_count();
    adj.assign(n, {});
    for (const auto& e : g.edges()) {
      if (e.id == skip_edge || e.ends[0] == e.ends[1]) continue;
      const int a = g.vertex_index(e.ends[0]);
      const int b = g.vertex_index(e.ends[1]);
      adj[a].emplace_back(e.id, b);
      adj[b].emplace_back(e.id, a);
    }
    on_path.assign(n, 0);
    const int s = g.vertex_index(source);
    on_path[s] = 1;
    vstack.push_back(s);
    dfs(s, 2);
  }

  void dfs(int v, long long len) {
    if (g.vertices()[v].id == target) {
      if (static_cast<std::int64_t>(out.paths.size()) >= cap)
        throw CapacityError("path enumeration exceeded cap of " + std::to_string(cap));
      GraphPath p;
      for (int x : vstack) p.vertices.push_back(g.vertices()[x].id);
      p.edges = estack;
      p.length = len;
      out.paths.push_back(std::move(p));
      return;
    }
    for (const auto& [eid, w] : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      vstack.push_back(w);
      estack.push_back(eid);
      dfs(w, len + edge_length(g.edge(eid).weight, mode));
      estack.pop_back();
      vstack.pop_back();
      on_path[w] = 0;
    }
  }
};

PathProfile search(const WeightedPlanarGraph& g, int skip, int source, int target,
                   PathLengthMode mode, std::int64_t cap) {
  PathSearch ps{g, skip, target, mode, cap, {}, {}, {}, {}, {}};
  ps.out.source = source;
  ps.out.target = target;
  if (source != target) ps.run(source);
  PathProfile out = std::move(ps.out);
  out.t = static_cast<long long>(out.paths.size());
  out.omega = 0;
  if (out.t > 0) {
    out.omega = std::numeric_limits<long long>::max();
    for (const auto& p : out.paths) out.omega = std::min(out.omega, p.length);
  }
  return out;
}

}  // namespace

PathProfile path_profile(const WeightedPlanarGraph& g, int edge_id, PathLengthMode mode,
                         std::int64_t cap) {
  const GraphEdge& e = g.edge(edge_id);
  return search(g, edge_id, e.ends[0], e.ends[1], mode, cap);
}

PathProfile paths_between(const WeightedPlanarGraph& g, int source, int target,
                          PathLengthMode mode, std::int64_t cap) {
  g.vertex_index(source);
  g.vertex_index(target);
  return search(g, -1, source, target, mode, cap);
}

MultiTwistProfile multi_twist_profile(const WeightedPlanarGraph& g, std::int64_t cap) {
  ValidationReport v = validate(g);
  if (!v.negative_components_single)
    throw HypothesisError("a component of the negative subgraph has two or more edges");
  MultiTwistProfile m;
  m.R = static_cast<int>(v.negative_edges.size());
  bool first = true;
  for (int eid : v.negative_edges) {
    const GraphEdge& e = g.edge(eid);
    PathProfile p = path_profile(g, eid, PathLengthMode::kPositiveOnly, cap);
    m.per_edge.push_back({eid, e.weight, p.t, p.omega});
    m.sum_r += e.weight;
    if (first) {
      m.r = e.weight;
      m.t = p.t;
      m.omega = p.omega;
    } else {
      m.r = std::min(m.r, e.weight);
      m.t = std::max(m.t, p.t);
      m.omega = std::min(m.omega, p.omega);
    }
    first = false;
  }
  m.r_abs = std::abs(m.r);
  if (m.R == 0) {
    m.predicate = true;
    m.literal_predicate = true;
    return m;
  }
  if (m.t > 0) {
    m.ratio = Rational(BigInt(static_cast<long>(m.omega)), BigInt(static_cast<long>(m.t)));
    m.ratio.canonicalize();
    m.predicate = m.ratio > Rational(m.r_abs * m.R);
    m.literal_predicate = m.ratio > Rational(m.r * m.R);
  }
  return m;
}

}  // namespace qlink
