#pragma once

#include <utility>
#include <vector>

#include "qlink/slope_lab/degrees.hpp"

namespace qlink {

struct SlopeReport {
  Quadratic fit;
  Rational js, jx;  // leading coefficient and half the linear coefficient
  int n_first = 0, n_last = 0;
  bool fit_verified = false;
  std::vector<std::pair<int, Rational>> residuals;  // nonzero only
};

// Quadratic through the first three samples, checked on the rest. Samples
// must sit at consecutive n; at least four are required.
SlopeReport fit_quasi_quadratic(const std::vector<std::pair<int, long long>>& samples);

}  // namespace qlink
