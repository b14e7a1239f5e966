#pragma once

#include <string>

#include "qlink/graphmodel/graph.hpp"
#include "qlink/qalgebra/poly_json.hpp"

namespace qlink {

Json graph_to_json(const WeightedPlanarGraph& g);
WeightedPlanarGraph graph_from_json(const Json& j);
WeightedPlanarGraph read_graph_file(const std::string& path);

}  // namespace qlink
