#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlink/graphmodel/graph.hpp"
#include "qlink/graphmodel/paths.hpp"

namespace qlink {

// Clause-by-clause near-alternating report for a weighted planar graph.
struct ClassificationReport {
  ValidationReport validation;
  bool single_negative_edge = false;
  int negative_edge = -1;
  int r = 0;
  bool r_at_least_two = false;
  long long t = 0;
  long long omega = 0;
  Rational ratio;            // omega / t
  bool t_above_two = false;
  bool ratio_above_r = false;
  bool deleted_two_connected = false;
  bool deleted_prime = false;
  bool contracted_a_adequate = false;
  bool contracted_b_adequate = false;
  bool contracted_adequate = false;
  bool verdict = false;
  std::vector<std::string> notes;
};

ClassificationReport near_alternating_check(const WeightedPlanarGraph& g,
                                            std::int64_t path_cap = kDefaultPathCap);

}  // namespace qlink
