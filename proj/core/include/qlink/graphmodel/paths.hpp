#pragma once

#include <cstdint>
#include <vector>

#include "qlink/graphmodel/graph.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

enum class PathLengthMode { kStandard, kPositiveOnly };

struct GraphPath {
  std::vector<int> vertices;
  std::vector<int> edges;
  long long length = 0;
};

struct PathProfile {
  int source = 0, target = 0;
  long long t = 0;
  long long omega = 0;  // meaningful only when t > 0
  std::vector<GraphPath> paths;
};

inline constexpr std::int64_t kDefaultPathCap = 1000000;

// Simple paths from the endpoints of edge_id in the graph with that edge
// deleted. Parallel edges yield distinct paths.
PathProfile path_profile(const WeightedPlanarGraph& g, int edge_id,
                         PathLengthMode mode = PathLengthMode::kStandard,
                         std::int64_t cap = kDefaultPathCap);
PathProfile paths_between(const WeightedPlanarGraph& g, int source, int target,
                          PathLengthMode mode = PathLengthMode::kStandard,
                          std::int64_t cap = kDefaultPathCap);

struct MultiTwistEdge {
  int edge = 0;
  int r = 0;
  long long t = 0;
  long long omega = 0;
};

struct MultiTwistProfile {
  int R = 0;
  int r = 0;          // most negative weight
  int r_abs = 0;
  long long t = 0;
  long long omega = 0;
  int sum_r = 0;
  std::vector<MultiTwistEdge> per_edge;
  bool predicate = false;          // omega / t > |r| * R
  bool literal_predicate = false;  // omega / t > r * R with r < 0
  Rational ratio;
};

MultiTwistProfile multi_twist_profile(const WeightedPlanarGraph& g,
                                      std::int64_t cap = kDefaultPathCap);

}  // namespace qlink
