#pragma once

#include <string>
#include <vector>

#include "qlink/engine/config.hpp"
#include "qlink/graphmodel/graph.hpp"
#include "qlink/slope_lab/volume.hpp"

namespace qlink {

enum class Theorem { kDegree, kSurface, kCoeffs, kAll };
Theorem parse_theorem(const std::string& s);
std::string theorem_name(Theorem t);

struct VerifyRow {
  std::string item;
  int n = 0;  // 0 when the row does not depend on n
  std::string predicted, observed;
  bool pass = false;
  bool advisory = false;
};

struct VerificationReport {
  std::string theorem;
  std::string variant;
  std::vector<Hypothesis> hypotheses;
  std::vector<VerifyRow> rows;
  std::vector<std::string> engine_errors;
  EngineStats stats;
  bool all_pass() const;
};

VerificationReport verify(const WeightedPlanarGraph& g, Theorem theorem, int n_first, int n_last,
                          const EngineConfig& cfg = {});

}  // namespace qlink
