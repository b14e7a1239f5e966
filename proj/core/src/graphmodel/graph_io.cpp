#include "qlink/graphmodel/graph_io.hpp"

#include <fstream>

#include "qlink/errors.hpp"

namespace qlink {

Json graph_to_json(const WeightedPlanarGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices()) {
    Json rot = Json::array();
    for (const auto& h : v.rotation) rot.push_back(Json::array({h.edge, h.end}));
    Json jv;
    jv["id"] = v.id;
    jv["rotation"] = std::move(rot);
    vs.push_back(std::move(jv));
  }
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["id"] = e.id;
    je["ends"] = Json::array({e.ends[0], e.ends[1]});
    je["weight"] = e.weight;
    es.push_back(std::move(je));
  }
  Json j;
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j;
}

WeightedPlanarGraph graph_from_json(const Json& j) {
  try {
    std::vector<GraphVertex> vs;
    for (const auto& jv : j.at("vertices")) {
      GraphVertex v;
      v.id = jv.at("id").get<int>();
      for (const auto& h : jv.at("rotation"))
        v.rotation.push_back(HalfEdge{h.at(0).get<int>(), h.at(1).get<int>()});
      vs.push_back(std::move(v));
    }
    std::vector<GraphEdge> es;
    for (const auto& je : j.at("edges")) {
      GraphEdge e;
      e.id = je.at("id").get<int>();
      e.ends[0] = je.at("ends").at(0).get<int>();
      e.ends[1] = je.at("ends").at(1).get<int>();
      e.weight = je.at("weight").get<int>();
      es.push_back(e);
    }
    WeightedPlanarGraph g(std::move(vs), std::move(es));
    g.check_rotation_system();
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("malformed graph JSON: ") + ex.what());
  }
}

WeightedPlanarGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open graph file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError("invalid JSON in " + path + ": " + ex.what());
  }
  return graph_from_json(j);
}

}  // namespace qlink
