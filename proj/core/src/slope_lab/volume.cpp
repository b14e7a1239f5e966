#include "qlink/slope_lab/volume.hpp"

#include <algorithm>
#include <sstream>

namespace qlink {

Rational v3_value() { return Rational(10149, 10000); }

std::string format_decimal(const Rational& q, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half away from zero
  Rational scaled = q * scale;
  BigInt num = scaled.get_num(), den = scaled.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt rounded = (2 * num + den) / (2 * den);
  BigInt whole = rounded / scale, frac = rounded % scale;
  std::string f = frac.get_str();
  f.insert(0, places - f.size(), '0');
  std::ostringstream os;
  if (neg && rounded != 0) os << '-';
  os << whole.get_str();
  if (places > 0) os << '.' << f;
  return os.str();
}

std::string variant_name(VolumeVariant v) {
  switch (v) {
    case VolumeVariant::kFkpTwist:
      return "fkp_twist";
    case VolumeVariant::kAdequateCoeff:
      return "adequate_coeff";
    case VolumeVariant::kNearAlternating:
      return "near_alt";
    case VolumeVariant::kMultiTwist:
      return "multi";
  }
  return "fkp_twist";
}

long long m_constant(int reduced_b_edges_contracted, int reduced_b_edges, int r_total) {
  return static_cast<long long>(reduced_b_edges_contracted) - reduced_b_edges - r_total;
}

namespace {

const Rational kTwistLower(70735, 100000);
const Rational kCoeffLower(35367, 100000);

bool holds(const std::vector<Hypothesis>& hs) {
  return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.ok; });
}

}  // namespace

VolumeReport volume_bounds(const VolumeInputs& in, VolumeVariant v) {
  VolumeReport r;
  r.variant = v;
  const Rational coeff_sum = rat(in.beta + in.beta_p);
  switch (v) {
    case VolumeVariant::kFkpTwist:
      r.hypotheses = {{"prime", in.prime},
                      {"twist_reduced", in.twist_reduced},
                      {"tw > 2", in.tw > 2},
                      {"every twist region has >= 7 crossings", in.min_region >= 7}};
      r.lower.a = kTwistLower * (in.tw - 1);
      r.upper.b = 10 * (in.tw - 1);
      break;
    case VolumeVariant::kAdequateCoeff:
      r.hypotheses = {{"adequate", in.adequate},
                      {"every twist region has >= 3 crossings", in.min_region >= 3}};
      r.lower.a = Rational(in.tw, 3) + 1;
      r.upper.a = 2 * in.tw;
      r.has_check = true;
      r.check_ok = r.lower.a <= coeff_sum && coeff_sum <= r.upper.a;
      r.notes.push_back("bounds constrain |beta| + |beta'|, not the volume");
      break;
    case VolumeVariant::kNearAlternating: {
      r.hypotheses = {{"near_alternating", in.near_alternating},
                      {"prime", in.prime},
                      {"twist_reduced", in.twist_reduced},
                      {"tw > 2", in.tw > 2},
                      {"every twist region has >= 7 crossings", in.min_region >= 7}};
      r.lower.a = kCoeffLower * (coeff_sum - 1);
      r.upper.b = 30 * (coeff_sum + rat(in.m_const) - 2);
      // twist-number sandwich for |beta| + |beta'| + M - 1
      const Rational mid = coeff_sum + rat(in.m_const) - 1;
      r.has_check = true;
      r.check_ok = Rational(in.tw - 1, 3) + 1 <= mid && mid <= 2 * (in.tw - 1);
      r.notes.push_back("M = " + std::to_string(in.m_const) + (in.m_const >= 0 ? " (>= 0)" : " (negative)"));
      break;
    }
    case VolumeVariant::kMultiTwist: {
      r.hypotheses = {{"prime", in.prime},
                      {"twist_reduced", in.twist_reduced},
                      {"tw >= 2", in.tw >= 2},
                      {"every twist region has >= 7 crossings", in.min_region >= 7}};
      r.lower.a = coeff_sum + rat(in.m_const) + 2 * (in.big_r - 1);
      r.upper.a = coeff_sum + rat(in.m_const) - 1 + Rational(in.big_r - 1, 3);
      r.has_scaled = true;
      const Rational lo = std::min(r.lower.a, r.upper.a), hi = std::max(r.lower.a, r.upper.a);
      r.scaled_lower.a = kTwistLower * lo;
      r.scaled_upper.b = 10 * hi;
      if (r.lower.a > r.upper.a) r.notes.push_back("printed bounds are inverted");
      r.notes.push_back("M = " + std::to_string(in.m_const) + (in.m_const >= 0 ? " (>= 0)" : " (negative)"));
      break;
    }
  }
  r.ordered = r.lower.value() <= r.upper.value();
  r.advisory = !holds(r.hypotheses);
  return r;
}

}  // namespace qlink
