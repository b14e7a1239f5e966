#pragma once

#include <string>

#include "qlink/graphmodel/graph_io.hpp"

namespace qlink::testing {

inline std::string data_path(const std::string& name) {
  return std::string(QLINK_TEST_DATA_DIR) + "/" + name;
}

inline WeightedPlanarGraph load_graph(const std::string& name) {
  return read_graph_file(data_path(name));
}

}  // namespace qlink::testing
