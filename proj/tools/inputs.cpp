#include "inputs.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/pd_io.hpp"
#include "qlink/errors.hpp"
#include "qlink/graphmodel/graph_io.hpp"

namespace qlink::cli {

LoadedInput load_input(const std::string& path, const CommonOptions& opt) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  LoadedInput in;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ArgumentError("bad JSON in '" + path + "': " + e.what());
    }
    if (j.contains("vertices")) {
      WeightedPlanarGraph g = graph_from_json(j);
      if (opt.add_full_twists != 0) g = add_full_twists(g, opt.add_full_twists);
      in.diagram = build_diagram(g);
      in.graph = std::move(g);
    } else {
      in.diagram = diagram_from_json(j);
    }
  } else {
    if (opt.add_full_twists != 0)
      throw ArgumentError("--add-full-twists needs a graph input");
    in.diagram = parse_pd(text);
  }
  if (!opt.orient.empty()) {
    const auto signs = parse_orientation(opt.orient, component_count(in.diagram));
    in.diagram = apply_orientation(in.diagram, signs);
  }
  in.diagram.twist_reduced = opt.twist_reduced;
  return in;
}

WeightedPlanarGraph require_graph(const LoadedInput& in, const std::string& command) {
  if (!in.graph) throw ArgumentError("'" + command + "' needs a weighted graph input");
  return *in.graph;
}

EngineConfig engine_config(const CommonOptions& opt) {
  EngineConfig cfg;
  cfg.engine = parse_engine(opt.engine);
  if (opt.threads < 1) throw ArgumentError("--threads must be >= 1");
  cfg.threads = opt.threads;
  return cfg;
}

std::pair<int, int> n_bounds(const CommonOptions& opt, int lo_default, int hi_default) {
  if (opt.n != 0 && !opt.n_range.empty()) throw ArgumentError("give -n or --n-range, not both");
  int lo = lo_default, hi = hi_default;
  if (opt.n != 0) lo = hi = opt.n;
  if (!opt.n_range.empty()) {
    static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(opt.n_range, m, re)) throw ArgumentError("--n-range must look like a..b");
    lo = std::stoi(m[1]);
    hi = std::stoi(m[2]);
  }
  if (lo < 2 || hi < lo) throw ArgumentError("n-range must satisfy 2 <= a <= b");
  return {lo, hi};
}

std::vector<int> parse_orientation(const std::string& spec, int components) {
  std::vector<int> signs(components, 1);
  static const std::regex item(R"(^\s*(\d+)\s*:\s*([+-])\s*$)");
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, item))
      throw ArgumentError("--orient entries look like <component>:+ or <component>:-");
    const int c = std::stoi(m[1]);
    if (c >= components) throw ArgumentError("--orient names component " + m[1].str() +
                                             " but the diagram has " +
                                             std::to_string(components));
    signs[c] = m[2] == "+" ? 1 : -1;
  }
  return signs;
}

std::string rat(const Rational& q) { return rational_string(q); }

Json stats_json(const EngineStats& s) {
  Json j;
  j["engine"] = s.engine;
  j["states_evaluated"] = s.states_evaluated;
  j["max_width"] = s.max_width;
  j["crossings"] = s.crossings;
  return j;
}

}  // namespace qlink::cli
