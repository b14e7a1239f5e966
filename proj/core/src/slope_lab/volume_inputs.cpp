#include "qlink/diagram/build.hpp"
#include "qlink/diagram/prime.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/engine/colored_jones.hpp"
#include "qlink/graphmodel/classify.hpp"
#include "qlink/slope_lab/coeffs.hpp"
#include "qlink/slope_lab/volume.hpp"

namespace qlink {

VolumeInputs volume_inputs(const WeightedPlanarGraph& g, const LinkDiagram& d, int n,
                           bool twist_reduced, const EngineConfig& cfg) {
  const CrossingCounts k = counts(d);
  VolumeInputs vi;
  vi.tw = k.tw;
  vi.min_region = k.region_sizes.empty() ? 0 : k.region_sizes.front();
  vi.prime = is_prime(d);
  vi.twist_reduced = twist_reduced;
  vi.adequate = adequacy(d).adequate();
  const auto neg = g.negative_edges();
  vi.big_r = static_cast<int>(neg.size());
  if (neg.size() == 1) vi.near_alternating = near_alternating_check(g).verdict;
  const TailCoefficients t = tail_coefficients(reduced_colored_jones(d, n, cfg), n);
  vi.beta = BigInt(abs(t.beta)).get_si();
  vi.beta_p = BigInt(abs(t.beta_p)).get_si();
  WeightedPlanarGraph contracted = g;
  int r_total = 0;
  for (int e : neg) {
    r_total += g.edge(e).weight;
    contracted = contract_edge(contracted, e);
  }
  const LinkDiagram dr = build_diagram(contracted);
  const int eb_r = resolve(dr, KauffmanState::all(dr, Smoothing::B)).reduced_edges;
  const int eb = resolve(d, KauffmanState::all(d, Smoothing::B)).reduced_edges;
  vi.m_const = m_constant(eb_r, eb, r_total);
  return vi;
}

}  // namespace qlink
