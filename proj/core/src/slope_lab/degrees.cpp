#include "qlink/slope_lab/degrees.hpp"

#include "qlink/diagram/states.hpp"
#include "qlink/errors.hpp"

namespace qlink {

DiagramCounts diagram_counts(const LinkDiagram& d) {
  DiagramCounts k;
  k.c = d.crossing_count();
  for (const auto& x : d.crossings) (x.sign > 0 ? k.c_pos : k.c_neg)++;
  k.writhe = k.c_pos - k.c_neg;
  k.s_a = circle_count(d, KauffmanState::all(d, Smoothing::A));
  k.s_b = circle_count(d, KauffmanState::all(d, Smoothing::B));
  return k;
}

long long h_lower(const DiagramCounts& k, int n) {
  const long long m = n - 1;
  return -m * m * k.c - 2 * m * k.s_a + static_cast<long long>(k.writhe) * (m * m + 2 * m);
}

long long h_upper(const DiagramCounts& k, int n) {
  const long long m = n - 1;
  return m * m * k.c + 2 * m * k.s_b + static_cast<long long>(k.writhe) * (m * m + 2 * m);
}

Quadratic h_lower_quadratic(const DiagramCounts& k) {
  // (w - c) m^2 + 2 (w - s_A) m with m = n - 1
  Quadratic q;
  q.a2 = k.writhe - k.c;
  q.a1 = 2 * k.c - 2 * k.s_a;
  q.a0 = -k.writhe - k.c + 2 * k.s_a;
  return q;
}

Quadratic h_upper_quadratic(const DiagramCounts& k) {
  Quadratic q;
  q.a2 = k.c + k.writhe;
  q.a1 = 2 * k.s_b - 2 * k.c;
  q.a0 = k.c - k.writhe - 2 * k.s_b;
  return q;
}

std::string variant_name(DegreeVariant v) {
  switch (v) {
    case DegreeVariant::kNearAlternating:
      return "near_alt";
    case DegreeVariant::kMurasugi:
      return "murasugi";
    case DegreeVariant::kMultiTwist:
      return "multi";
    case DegreeVariant::kAdequate:
      return "adequate";
  }
  return "adequate";
}

long long DegreePrediction::predict(int n) const {
  const Rational v = min_degree.at(n);
  if (v.get_den() != 1) throw ConsistencyError("degree prediction is not an integer");
  return v.get_num().get_si();
}

long long DegreePrediction::predict_max(int n) const {
  const Rational v = max_degree.at(n);
  if (v.get_den() != 1) throw ConsistencyError("degree prediction is not an integer");
  return v.get_num().get_si();
}

DegreePrediction predict_min_degree(const LinkDiagram& d, int r_total, DegreeVariant v) {
  DegreePrediction p;
  p.variant = v;
  p.counts = diagram_counts(d);
  p.r_total = r_total;
  p.min_degree = h_lower_quadratic(p.counts);
  // -2 r ((n-1)^2 + (n-1)) = -2 r (n^2 - n)
  p.min_degree.a2 -= 2 * r_total;
  p.min_degree.a1 += 2 * r_total;
  p.max_degree = h_upper_quadratic(p.counts);
  return p;
}

}  // namespace qlink
