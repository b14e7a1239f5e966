#include "qlink/graphmodel/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qlink/errors.hpp"

namespace qlink {

WeightedPlanarGraph::WeightedPlanarGraph(std::vector<GraphVertex> vs,
                                         std::vector<GraphEdge> es)
    : vertices_(std::move(vs)), edges_(std::move(es)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
  rebuild_index();
}

void WeightedPlanarGraph::rebuild_index() {
  vindex_.clear();
  eindex_.clear();
  for (int i = 0; i < vertex_count(); ++i) {
    if (!vindex_.emplace(vertices_[i].id, i).second)
      throw StructuralError("duplicate vertex id " + std::to_string(vertices_[i].id));
  }
  for (int i = 0; i < edge_count(); ++i) {
    if (!eindex_.emplace(edges_[i].id, i).second)
      throw StructuralError("duplicate edge id " + std::to_string(edges_[i].id));
  }
}

int WeightedPlanarGraph::vertex_index(int id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw StructuralError("unknown vertex id " + std::to_string(id));
  return it->second;
}

int WeightedPlanarGraph::edge_index(int id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw StructuralError("unknown edge id " + std::to_string(id));
  return it->second;
}

bool WeightedPlanarGraph::has_edge(int id) const { return eindex_.count(id) > 0; }

void WeightedPlanarGraph::check_rotation_system() const {
  std::set<HalfEdge> seen;
  for (const auto& v : vertices_) {
    for (const auto& h : v.rotation) {
      if (!has_edge(h.edge))
        throw StructuralError("rotation of vertex " + std::to_string(v.id) +
                              " names unknown edge " + std::to_string(h.edge));
      if (h.end != 0 && h.end != 1)
        throw StructuralError("half-edge end index must be 0 or 1");
      if (edge(h.edge).ends[h.end] != v.id)
        throw StructuralError("half-edge (" + std::to_string(h.edge) + "," +
                              std::to_string(h.end) + ") listed at wrong vertex " +
                              std::to_string(v.id));
      if (!seen.insert(h).second)
        throw StructuralError("half-edge listed twice");
    }
  }
  for (const auto& e : edges_) {
    for (int k = 0; k < 2; ++k) {
      if (!vindex_.count(e.ends[k]))
        throw StructuralError("edge " + std::to_string(e.id) + " has unknown endpoint");
      if (!seen.count(HalfEdge{e.id, k}))
        throw StructuralError("half-edge (" + std::to_string(e.id) + "," +
                              std::to_string(k) + ") missing from rotation");
    }
  }
}

std::vector<std::vector<HalfEdge>> WeightedPlanarGraph::faces() const {
  // successor of a half-edge in the counterclockwise rotation at its vertex
  std::map<HalfEdge, HalfEdge> next;
  for (const auto& v : vertices_) {
    const auto& rot = v.rotation;
    for (std::size_t i = 0; i < rot.size(); ++i) next[rot[i]] = rot[(i + 1) % rot.size()];
  }
  std::set<HalfEdge> used;
  std::vector<std::vector<HalfEdge>> out;
  for (const auto& e : edges_) {
    for (int k = 0; k < 2; ++k) {
      HalfEdge start{e.id, k};
      if (used.count(start)) continue;
      std::vector<HalfEdge> face;
      HalfEdge h = start;
      do {
        used.insert(h);
        face.push_back(h);
        h = next.at(HalfEdge{h.edge, 1 - h.end});
      } while (!(h == start));
      out.push_back(std::move(face));
    }
  }
  return out;
}

int WeightedPlanarGraph::connected_components() const {
  std::vector<int> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges_)
    parent[find(vertex_index(e.ends[0]))] = find(vertex_index(e.ends[1]));
  int c = 0;
  for (int i = 0; i < vertex_count(); ++i) c += find(i) == i;
  return c;
}

std::vector<int> WeightedPlanarGraph::cut_vertices() const {
  std::vector<int> cuts;
  const int base = connected_components();
  for (const auto& v : vertices_) {
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : edges_) {
      if (e.ends[0] == v.id || e.ends[1] == v.id) continue;
      parent[find(vertex_index(e.ends[0]))] = find(vertex_index(e.ends[1]));
    }
    int c = 0;
    for (int i = 0; i < vertex_count(); ++i)
      if (vertices_[i].id != v.id) c += find(i) == i;
    if (c > base) cuts.push_back(v.id);
  }
  return cuts;
}

bool WeightedPlanarGraph::is_two_connected() const {
  return vertex_count() >= 2 && is_connected() && cut_vertices().empty();
}

std::vector<int> WeightedPlanarGraph::self_loops() const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.ends[0] == e.ends[1]) out.push_back(e.id);
  return out;
}

std::vector<int> WeightedPlanarGraph::negative_edges() const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.weight < 0) out.push_back(e.id);
  return out;
}

WeightedPlanarGraph WeightedPlanarGraph::with_weights(const std::map<int, int>& w) const {
  WeightedPlanarGraph g = *this;
  for (auto& e : g.edges_) {
    auto it = w.find(e.id);
    if (it != w.end()) e.weight = it->second;
  }
  return g;
}

ValidationReport validate(const WeightedPlanarGraph& g) {
  ValidationReport r;
  g.check_rotation_system();
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.faces = g.face_count();
  const int comps = g.connected_components();
  r.connected = comps <= 1;
  // Face orbits are traced per component, so each component must have Euler
  // characteristic 2; an isolated vertex has no darts and one face.
  int isolated = 0;
  for (const auto& v : g.vertices()) isolated += v.rotation.empty();
  r.planar = r.vertices - r.edges + r.faces + isolated == 2 * comps;
  r.cut_vertices = g.cut_vertices();
  r.two_connected = g.is_two_connected();
  r.self_loops = g.self_loops();
  r.negative_edges = g.negative_edges();
  for (const auto& e : g.edges())
    if (e.weight == 0) r.zero_weight_edges.push_back(e.id);
  // each negative edge must be its own component of the negative subgraph
  r.negative_components_single = true;
  for (std::size_t i = 0; i < r.negative_edges.size(); ++i) {
    for (std::size_t j = i + 1; j < r.negative_edges.size(); ++j) {
      const auto& a = g.edge(r.negative_edges[i]);
      const auto& b = g.edge(r.negative_edges[j]);
      for (int x : a.ends)
        for (int y : b.ends)
          if (x == y) r.negative_components_single = false;
    }
  }
  return r;
}

WeightedPlanarGraph delete_edge(const WeightedPlanarGraph& g, int edge_id) {
  if (!g.has_edge(edge_id)) throw ArgumentError("delete: unknown edge " + std::to_string(edge_id));
  std::vector<GraphVertex> vs = g.vertices();
  for (auto& v : vs)
    std::erase_if(v.rotation, [&](const HalfEdge& h) { return h.edge == edge_id; });
  std::vector<GraphEdge> es;
  for (const auto& e : g.edges())
    if (e.id != edge_id) es.push_back(e);
  return WeightedPlanarGraph(std::move(vs), std::move(es));
}

WeightedPlanarGraph contract_edge(const WeightedPlanarGraph& g, int edge_id) {
  if (!g.has_edge(edge_id)) throw ArgumentError("contract: unknown edge " + std::to_string(edge_id));
  const GraphEdge& ce = g.edge(edge_id);
  if (ce.ends[0] == ce.ends[1]) throw ArgumentError("contract: edge is a self-loop");
  const int keep = ce.ends[0];
  const int gone = ce.ends[1];
  auto after = [&](int vid, int end) {
    const auto& rot = g.vertex(vid).rotation;
    auto it = std::find(rot.begin(), rot.end(), HalfEdge{edge_id, end});
    std::vector<HalfEdge> seq;
    const std::size_t pos = it - rot.begin();
    for (std::size_t k = 1; k < rot.size(); ++k) seq.push_back(rot[(pos + k) % rot.size()]);
    return seq;
  };
  std::vector<HalfEdge> merged = after(keep, 0);
  auto tail = after(gone, 1);
  merged.insert(merged.end(), tail.begin(), tail.end());

  std::vector<GraphVertex> vs;
  for (const auto& v : g.vertices()) {
    if (v.id == gone) continue;
    if (v.id == keep) {
      vs.push_back(GraphVertex{keep, merged});
    } else {
      vs.push_back(v);
    }
  }
  std::vector<GraphEdge> es;
  for (auto e : g.edges()) {
    if (e.id == edge_id) continue;
    for (int& x : e.ends)
      if (x == gone) x = keep;
    es.push_back(e);
  }
  return WeightedPlanarGraph(std::move(vs), std::move(es));
}

WeightedPlanarGraph add_full_twists(const WeightedPlanarGraph& g, int m) {
  if (m < 0) throw ArgumentError("add_full_twists requires m >= 0");
  std::map<int, int> w;
  for (const auto& e : g.edges())
    if (e.weight > 0) w[e.id] = e.weight + 2 * m;
  return g.with_weights(w);
}

WeightedPlanarGraph negate_weights(const WeightedPlanarGraph& g) {
  std::map<int, int> w;
  for (const auto& e : g.edges()) w[e.id] = -e.weight;
  return g.with_weights(w);
}

WeightedPlanarGraph transform(const WeightedPlanarGraph& g, const GraphTransform& op) {
  switch (op.kind) {
    case TransformKind::kDelete:
      return delete_edge(g, op.arg);
    case TransformKind::kContract:
      return contract_edge(g, op.arg);
    case TransformKind::kAddFullTwists:
      return add_full_twists(g, op.arg);
  }
  throw ArgumentError("unknown transform");
}

WeightedPlanarGraph pretzel_graph(const std::vector<int>& weights) {
  const int k = static_cast<int>(weights.size());
  GraphVertex top{0, {}}, bottom{1, {}};
  std::vector<GraphEdge> es;
  for (int i = 0; i < k; ++i) {
    es.push_back(GraphEdge{i, {0, 1}, weights[i]});
    top.rotation.push_back(HalfEdge{i, 0});
    bottom.rotation.push_back(HalfEdge{k - 1 - i, 1});
  }
  return WeightedPlanarGraph({top, bottom}, std::move(es));
}

}  // namespace qlink
