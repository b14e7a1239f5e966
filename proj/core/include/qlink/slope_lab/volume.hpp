#pragma once

#include <string>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/engine/config.hpp"
#include "qlink/graphmodel/graph.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

// Volume of the regular ideal tetrahedron as used by the printed constants.
Rational v3_value();

// a + b * v3, kept apart so v3 is substituted only when printing.
struct V3Linear {
  Rational a, b;
  Rational value() const { return a + b * v3_value(); }
};
std::string format_decimal(const Rational& q, int places = 5);

enum class VolumeVariant { kFkpTwist, kAdequateCoeff, kNearAlternating, kMultiTwist };
std::string variant_name(VolumeVariant v);

struct VolumeInputs {
  int tw = 0;
  int min_region = 0;
  bool prime = false;
  bool twist_reduced = false;
  bool adequate = false;
  bool near_alternating = false;
  long long beta = 0, beta_p = 0;  // |beta|, |beta'|
  long long m_const = 0;           // M from the reduced all-B graphs
  int big_r = 1;                   // number of negative regions
};

struct Hypothesis {
  std::string name;
  bool ok = false;
};

struct VolumeReport {
  VolumeVariant variant = VolumeVariant::kFkpTwist;
  V3Linear lower, upper;
  bool ordered = false;  // lower <= upper
  bool advisory = false; // some hypothesis failed
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> notes;
  // Some variants constrain |beta| + |beta'| rather than the volume.
  bool has_check = false;
  bool check_ok = false;
  // Multi-twist only: the same bounds with the twist-number constants applied.
  bool has_scaled = false;
  V3Linear scaled_lower, scaled_upper;
};

VolumeReport volume_bounds(const VolumeInputs& in, VolumeVariant v);

// M = e'(all-B of the contracted diagram) - e'(all-B of D) - r_total.
long long m_constant(int reduced_b_edges_contracted, int reduced_b_edges, int r_total);

// Gathers the inputs for d = build_diagram(g): twist data, adequacy, the
// classification verdict, |beta| and |beta'| from the reduced colored Jones
// polynomial at n, and M with every negative edge contracted.
VolumeInputs volume_inputs(const WeightedPlanarGraph& g, const LinkDiagram& d, int n,
                           bool twist_reduced, const EngineConfig& cfg = {});

}  // namespace qlink
