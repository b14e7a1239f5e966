#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qlink {

struct HalfEdge {
  int edge = 0;
  int end = 0;  // 0 or 1: which endpoint of the edge
  bool operator==(const HalfEdge&) const = default;
  auto operator<=>(const HalfEdge&) const = default;
};

struct GraphVertex {
  int id = 0;
  std::vector<HalfEdge> rotation;  // counterclockwise
};

struct GraphEdge {
  int id = 0;
  int ends[2] = {0, 0};  // vertex ids
  int weight = 0;        // signed half-twist count
};

// Planar graph with a rotation system and integer edge weights. Vertices and
// edges are kept sorted by id; ids need not be contiguous.
class WeightedPlanarGraph {
 public:
  WeightedPlanarGraph() = default;
  WeightedPlanarGraph(std::vector<GraphVertex> vs, std::vector<GraphEdge> es);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int vertex_index(int id) const;
  int edge_index(int id) const;
  bool has_edge(int id) const;
  const GraphVertex& vertex(int id) const { return vertices_[vertex_index(id)]; }
  const GraphEdge& edge(int id) const { return edges_[edge_index(id)]; }
  int endpoint(const HalfEdge& h) const { return edge(h.edge).ends[h.end]; }

  // Faces of the embedding as cyclic sequences of half-edges.
  std::vector<std::vector<HalfEdge>> faces() const;
  int face_count() const { return static_cast<int>(faces().size()); }
  int connected_components() const;
  bool is_connected() const { return connected_components() <= 1; }
  std::vector<int> cut_vertices() const;
  bool is_two_connected() const;
  std::vector<int> self_loops() const;
  std::vector<int> negative_edges() const;

  // Throws StructuralError when the rotation system is not a valid pairing.
  void check_rotation_system() const;

  WeightedPlanarGraph with_weights(const std::map<int, int>& w) const;

 private:
  void rebuild_index();
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::map<int, int> vindex_, eindex_;
};

struct ValidationReport {
  bool rotation_ok = true;
  bool planar = false;
  bool connected = false;
  bool two_connected = false;
  int vertices = 0, edges = 0, faces = 0;
  std::vector<int> cut_vertices;
  std::vector<int> self_loops;
  std::vector<int> negative_edges;
  std::vector<int> zero_weight_edges;
  bool negative_components_single = false;
};

ValidationReport validate(const WeightedPlanarGraph& g);

enum class TransformKind { kDelete, kContract, kAddFullTwists };
struct GraphTransform {
  TransformKind kind;
  int arg = 0;  // edge id, or m for full twists
};

WeightedPlanarGraph delete_edge(const WeightedPlanarGraph& g, int edge_id);
WeightedPlanarGraph contract_edge(const WeightedPlanarGraph& g, int edge_id);
WeightedPlanarGraph add_full_twists(const WeightedPlanarGraph& g, int m);
WeightedPlanarGraph negate_weights(const WeightedPlanarGraph& g);
WeightedPlanarGraph transform(const WeightedPlanarGraph& g, const GraphTransform& op);

// Families used throughout tests and the CLI.
// Two vertices joined by parallel edges in fan order.
WeightedPlanarGraph pretzel_graph(const std::vector<int>& weights);

}  // namespace qlink
