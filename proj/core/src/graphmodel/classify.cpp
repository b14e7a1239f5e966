#include "qlink/graphmodel/classify.hpp"

#include <cstdlib>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/prime.hpp"
#include "qlink/diagram/states.hpp"

namespace qlink {

ClassificationReport near_alternating_check(const WeightedPlanarGraph& g, std::int64_t path_cap) {
  ClassificationReport rep;
  rep.validation = validate(g);
  const auto& v = rep.validation;
  if (!v.planar) rep.notes.push_back("graph fails the Euler check");
  if (!v.two_connected) rep.notes.push_back("graph is not 2-connected");
  if (!v.self_loops.empty()) rep.notes.push_back("graph has one-edged loops");
  rep.single_negative_edge = v.negative_edges.size() == 1;
  if (!rep.single_negative_edge) {
    rep.notes.push_back("expected exactly one negative edge, found " +
                        std::to_string(v.negative_edges.size()));
    return rep;
  }
  const int e = v.negative_edges[0];
  rep.negative_edge = e;
  rep.r = g.edge(e).weight;
  rep.r_at_least_two = std::abs(rep.r) >= 2;

  PathProfile prof = path_profile(g, e, PathLengthMode::kStandard, path_cap);
  rep.t = prof.t;
  rep.omega = prof.omega;
  rep.t_above_two = prof.t > 2;
  if (prof.t > 0) {
    rep.ratio = Rational(static_cast<long>(prof.omega), static_cast<long>(prof.t));
    rep.ratio.canonicalize();
    rep.ratio_above_r = rep.ratio > Rational(std::abs(rep.r));
  }

  const WeightedPlanarGraph deleted = delete_edge(g, e);
  rep.deleted_two_connected = deleted.is_two_connected();
  const LinkDiagram dd = build_diagram(deleted);
  rep.deleted_prime = is_prime(dd);

  const WeightedPlanarGraph contracted = contract_edge(g, e);
  const Adequacy a = adequacy(build_diagram(contracted));
  rep.contracted_a_adequate = a.a_adequate;
  rep.contracted_b_adequate = a.b_adequate;
  rep.contracted_adequate = a.adequate();

  rep.verdict = v.planar && v.two_connected && v.self_loops.empty() && rep.r_at_least_two &&
                rep.t_above_two && rep.ratio_above_r && rep.deleted_two_connected &&
                rep.deleted_prime && rep.contracted_adequate;
  return rep;
}

}  // namespace qlink
