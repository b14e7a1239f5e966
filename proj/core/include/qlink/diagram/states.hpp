#pragma once

#include <utility>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"

namespace qlink {

enum class Smoothing : unsigned char { A, B };

struct KauffmanState {
  std::vector<Smoothing> choice;
  static KauffmanState all(const LinkDiagram& d, Smoothing s) {
    return KauffmanState{std::vector<Smoothing>(d.crossings.size(), s)};
  }
  int count(Smoothing s) const;
};

// Slot pairs joined by the smoothing at a crossing.
inline std::array<std::pair<int, int>, 2> smoothing_pairs(Smoothing s) {
  if (s == Smoothing::A) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

struct StateGraphSummary {
  int circles = 0;
  std::vector<int> arc_circle;                 // circle id per arc
  std::vector<std::pair<int, int>> edges;      // one per crossing
  std::vector<std::pair<int, int>> reduced;    // distinct edges, sorted
  int reduced_edges = 0;
  int graph_components = 0;
  int betti1 = 0;  // reduced_edges - circles + components
  std::vector<int> one_edged_loops;            // offending crossings
  // Loop census per circle: number of one-edged loops based at each circle.
  std::vector<int> loops_at_circle;
};

StateGraphSummary resolve(const LinkDiagram& d, const KauffmanState& s);
int circle_count(const LinkDiagram& d, const KauffmanState& s);

struct Adequacy {
  bool a_adequate = false;
  bool b_adequate = false;
  bool adequate() const { return a_adequate && b_adequate; }
};
Adequacy adequacy(const LinkDiagram& d);

}  // namespace qlink
