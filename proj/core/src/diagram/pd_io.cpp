#include "qlink/diagram/pd_io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

LinkDiagram renumber(std::vector<std::pair<std::array<int, 4>, int>> raw, int loops,
                     bool twist_reduced) {
  std::map<int, int> ids;
  for (const auto& [arcs, s] : raw)
    for (int a : arcs) ids.emplace(a, 0);
  int next = 0;
  for (auto& [k, v] : ids) v = next++;
  LinkDiagram d;
  d.free_loops = loops;
  d.twist_reduced = twist_reduced;
  for (const auto& [arcs, s] : raw) {
    Crossing x;
    for (int k = 0; k < 4; ++k) x.arcs[k] = ids[arcs[k]];
    x.sign = s;
    d.crossings.push_back(x);
  }
  if (next != d.arc_count())
    throw StructuralError("PD code uses " + std::to_string(next) + " labels for " +
                          std::to_string(d.crossing_count()) + " crossings");
  require_valid(d);
  return d;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  static const std::regex cross_re(
      R"(^\s*X([pn])\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*$)");
  static const std::regex loop_re(R"(^\s*Loop\[\s*(-?\d+)\s*\]\s*$)");
  std::vector<std::pair<std::array<int, 4>, int>> raw;
  int loops = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find('#') != std::string::npos) line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(line, m, cross_re)) {
      std::array<int, 4> arcs{};
      for (int k = 0; k < 4; ++k) arcs[k] = std::stoi(m[k + 2].str());
      raw.emplace_back(arcs, m[1].str() == "p" ? 1 : -1);
    } else if (std::regex_match(line, m, loop_re)) {
      ++loops;
    } else {
      throw ArgumentError("PD line " + std::to_string(lineno) + " not understood: " + line);
    }
  }
  return renumber(std::move(raw), loops, false);
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& x : d.crossings) {
    os << (x.sign > 0 ? "Xp[" : "Xn[") << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2]
       << "," << x.arcs[3] << "]\n";
  }
  for (int i = 0; i < d.free_loops; ++i) os << "Loop[" << d.arc_count() + i << "]\n";
  return os.str();
}

Json diagram_to_json(const LinkDiagram& d) {
  Json xs = Json::array();
  for (const auto& x : d.crossings) {
    Json jx;
    jx["sign"] = x.sign > 0 ? "+" : "-";
    jx["arcs"] = Json::array({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]});
    xs.push_back(std::move(jx));
  }
  Json loops = Json::array();
  for (int i = 0; i < d.free_loops; ++i) loops.push_back(d.arc_count() + i);
  Json j;
  j["crossings"] = std::move(xs);
  j["loops"] = std::move(loops);
  j["twist_reduced"] = d.twist_reduced;
  return j;
}

LinkDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<std::pair<std::array<int, 4>, int>> raw;
    for (const auto& jx : j.at("crossings")) {
      std::array<int, 4> arcs{};
      for (int k = 0; k < 4; ++k) arcs[k] = jx.at("arcs").at(k).get<int>();
      const std::string s = jx.at("sign").get<std::string>();
      if (s != "+" && s != "-") throw ArgumentError("crossing sign must be \"+\" or \"-\"");
      raw.emplace_back(arcs, s == "+" ? 1 : -1);
    }
    const int loops = j.contains("loops") ? static_cast<int>(j.at("loops").size()) : 0;
    const bool tr = j.value("twist_reduced", false);
    return renumber(std::move(raw), loops, tr);
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("malformed diagram JSON: ") + ex.what());
  }
}

LinkDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open diagram file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return diagram_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& ex) {
      throw ArgumentError("invalid JSON in " + path + ": " + ex.what());
    }
  }
  return parse_pd(text);
}

}  // namespace qlink
