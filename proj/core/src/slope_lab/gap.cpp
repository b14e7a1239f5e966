#include "qlink/slope_lab/gap.hpp"

#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink {

namespace {

Rational flow_term(const GapQuery& q) {
  if (q.t < 1) throw ArgumentError("gap query needs t >= 1");
  const IntPartition p = minimal_partition(q.c_split, q.t);
  Rational sum = 0;
  for (int m : p.parts) sum += rat((q.omega - 2) * (2LL * m * m + 2LL * m) + 4LL * m * m);
  return sum;
}

}  // namespace

Rational gap_bound(const GapQuery& q) {
  const Rational c2 = 2 * q.c_split;
  return -flow_term(q) - (Rational(q.r) * c2 * c2 / 2 + c2 * q.r);
}

Rational gap_bound_variant(const GapQuery& q) {
  const Rational c2 = 2 * q.c_split;
  return -flow_term(q) - (Rational(q.r) * c2 * c2 / 2 + c2 * (q.r - 1));
}

}  // namespace qlink
