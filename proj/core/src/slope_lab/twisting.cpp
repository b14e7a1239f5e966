#include "qlink/slope_lab/twisting.hpp"

namespace qlink {

FullTwistSearch find_full_twists(const WeightedPlanarGraph& g, int search_cap) {
  FullTwistSearch out;
  auto profile = [&](int m) { return multi_twist_profile(add_full_twists(g, m)); };
  MultiTwistProfile p0 = profile(0);
  if (p0.R == 0) {
    out.diagnosis = "graph has no negative edges";
    return out;
  }
  for (const auto& e : p0.per_edge)
    if (e.t == 0) {
      out.diagnosis = "negative edge " + std::to_string(e.edge) + " has no parallel path";
      return out;
    }
  if (p0.predicate) {
    out.bounded = true;
    out.at_m = p0;
    return out;
  }
  long long hi = 1;
  while (!profile(static_cast<int>(hi)).predicate) {
    hi *= 2;
    if (hi > search_cap) {
      out.diagnosis = "omega does not grow with added twists";
      return out;
    }
  }
  long long lo = hi / 2;  // predicate false at lo
  while (hi - lo > 1) {
    const long long mid = (lo + hi) / 2;
    if (profile(static_cast<int>(mid)).predicate) hi = mid;
    else lo = mid;
  }
  out.bounded = true;
  out.m = static_cast<int>(hi);
  out.at_m = profile(out.m);
  return out;
}

}  // namespace qlink
