#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/engine/config.hpp"
#include "qlink/graphmodel/graph.hpp"
#include "qlink/qalgebra/poly_json.hpp"

namespace qlink::cli {

struct LoadedInput {
  std::optional<WeightedPlanarGraph> graph;
  LinkDiagram diagram;
};

struct CommonOptions {
  std::string engine = "auto";
  int threads = 1;
  bool timing = false;  // add runtime_ms, which makes output run-dependent
  std::string orient;
  bool twist_reduced = false;
  int add_full_twists = 0;
  std::string n_range;
  int n = 0;
};

// Graph JSON (has "vertices"), diagram JSON (has "crossings") or PD text.
LoadedInput load_input(const std::string& path, const CommonOptions& opt);
WeightedPlanarGraph require_graph(const LoadedInput& in, const std::string& command);

EngineConfig engine_config(const CommonOptions& opt);
std::pair<int, int> n_bounds(const CommonOptions& opt, int lo_default, int hi_default);

// "0:+,1:-" -> per-component signs
std::vector<int> parse_orientation(const std::string& spec, int components);

std::string rat(const Rational& q);
Json stats_json(const EngineStats& s);

}  // namespace qlink::cli
