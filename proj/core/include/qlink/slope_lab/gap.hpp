#pragma once

#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

struct GapQuery {
  long long omega = 2;
  int t = 1;
  int r = 0;        // negative weight
  int c_split = 0;  // split strands
};

// -(sum_i (omega-2)(2 m_i^2 + 2 m_i) + 4 m_i^2) - (r (2c)^2 / 2 + 2 c r), with
// m_i the minimal partition of c into t parts.
Rational gap_bound(const GapQuery& q);
// The same with the linear term (2c)(r - 1), for comparison.
Rational gap_bound_variant(const GapQuery& q);

}  // namespace qlink
