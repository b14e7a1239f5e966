#pragma once

#include <string>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

// Counts that the degree formulas consume.
struct DiagramCounts {
  int c = 0, c_pos = 0, c_neg = 0, writhe = 0;
  int s_a = 0, s_b = 0;
};
DiagramCounts diagram_counts(const LinkDiagram& d);

// d(n) = a2 n^2 + a1 n + a0.
struct Quadratic {
  Rational a2, a1, a0;
  Rational at(int n) const { return a2 * n * n + a1 * n + a0; }
  bool operator==(const Quadratic&) const = default;
};

// Lower and upper bounds on the v-degrees of the colored Jones polynomial.
long long h_lower(const DiagramCounts& k, int n);
long long h_upper(const DiagramCounts& k, int n);
Quadratic h_lower_quadratic(const DiagramCounts& k);
Quadratic h_upper_quadratic(const DiagramCounts& k);

enum class DegreeVariant { kNearAlternating, kMurasugi, kMultiTwist, kAdequate };
std::string variant_name(DegreeVariant v);

struct DegreePrediction {
  DegreeVariant variant = DegreeVariant::kAdequate;
  DiagramCounts counts;
  int r_total = 0;  // r, or the sum of the negative weights
  Quadratic min_degree;
  Quadratic max_degree;  // B-adequate side
  bool hypotheses_ok = true;
  std::vector<std::string> failed_hypotheses;
  long long predict(int n) const;
  long long predict_max(int n) const;
};

// Min degree h_n(D) - 2 r_total ((n-1)^2 + (n-1)); r_total = 0 gives h_n(D).
DegreePrediction predict_min_degree(const LinkDiagram& d, int r_total, DegreeVariant v);

}  // namespace qlink
