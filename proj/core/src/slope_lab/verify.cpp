#include "qlink/slope_lab/verify.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/engine/colored_jones.hpp"
#include "qlink/errors.hpp"
#include "qlink/graphmodel/classify.hpp"
#include "qlink/graphmodel/paths.hpp"
#include "qlink/slope_lab/coeffs.hpp"
#include "qlink/slope_lab/degrees.hpp"
#include "qlink/slope_lab/surface.hpp"

namespace qlink {

Theorem parse_theorem(const std::string& s) {
  if (s == "degree") return Theorem::kDegree;
  if (s == "surface") return Theorem::kSurface;
  if (s == "coeffs") return Theorem::kCoeffs;
  if (s == "all") return Theorem::kAll;
  throw ArgumentError("unknown theorem '" + s + "' (degree, surface, coeffs, all)");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kDegree:
      return "degree";
    case Theorem::kSurface:
      return "surface";
    case Theorem::kCoeffs:
      return "coeffs";
    case Theorem::kAll:
      return "all";
  }
  return "all";
}

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerifyRow& r) { return r.pass || r.advisory; });
}

namespace {

bool holds(const std::vector<Hypothesis>& hs) {
  return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.ok; });
}

VerifyRow int_row(const std::string& item, int n, long long want, long long got, bool advisory) {
  return VerifyRow{item, n, std::to_string(want), std::to_string(got), want == got, advisory};
}

}  // namespace

VerificationReport verify(const WeightedPlanarGraph& g, Theorem theorem, int n_first, int n_last,
                          const EngineConfig& cfg) {
  if (n_first < 2 || n_last < n_first) throw ArgumentError("n-range must satisfy 2 <= a <= b");
  VerificationReport rep;
  rep.theorem = theorem_name(theorem);
  const BuiltDiagram built = build_diagram_with_map(g);
  const LinkDiagram& d = built.diagram;
  const ValidationReport val = validate(g);
  const int big_r = static_cast<int>(val.negative_edges.size());
  const Adequacy adq = adequacy(d);

  int r_total = 0;
  for (int e : val.negative_edges) r_total += g.edge(e).weight;
  std::vector<Hypothesis>& hyp = rep.hypotheses;
  DegreeVariant variant = DegreeVariant::kAdequate;
  if (big_r == 0) {
    hyp.push_back({"A-adequate", adq.a_adequate});
  } else if (big_r == 1) {
    variant = DegreeVariant::kNearAlternating;
    const ClassificationReport c = near_alternating_check(g);
    hyp.push_back({"planar", c.validation.planar});
    hyp.push_back({"2-connected", c.validation.two_connected});
    hyp.push_back({"no one-edged loops", c.validation.self_loops.empty()});
    hyp.push_back({"|r| >= 2", c.r_at_least_two});
    hyp.push_back({"t > 2", c.t_above_two});
    hyp.push_back({"omega/t > |r|", c.ratio_above_r});
    hyp.push_back({"deleted graph 2-connected", c.deleted_two_connected});
    hyp.push_back({"deleted diagram prime", c.deleted_prime});
    hyp.push_back({"contracted diagram adequate", c.contracted_adequate});
  } else {
    variant = DegreeVariant::kMultiTwist;
    hyp.push_back({"2-connected", val.two_connected});
    hyp.push_back({"negative components are single edges", val.negative_components_single});
    bool predicate = false;
    if (val.negative_components_single) predicate = multi_twist_profile(g).predicate;
    hyp.push_back({"omega/t > |r| R", predicate});
  }
  rep.variant = variant_name(variant);
  const bool hyp_ok = holds(hyp);
  const bool max_ok = adq.b_adequate;
  rep.hypotheses.push_back({"B-adequate (max side)", max_ok});

  const bool want_degree = theorem == Theorem::kDegree || theorem == Theorem::kAll;
  const bool want_surface = theorem == Theorem::kSurface || theorem == Theorem::kAll;
  const bool want_coeffs = theorem == Theorem::kCoeffs || theorem == Theorem::kAll;

  if (want_surface) {
    const DiagramCounts k = diagram_counts(d);
    const SurfaceReport all_a = surface_report(d, KauffmanState::all(d, Smoothing::A));
    rep.rows.push_back(int_row("all_A_slope", 0, -2LL * k.c_neg, all_a.boundary_slope, false));
    const SurfaceReport ps = surface_report(d, pretzel_state(built, g));
    rep.rows.push_back(
        int_row("pretzel_slope", 0, -2LL * k.c_neg - 2LL * r_total, ps.boundary_slope, !hyp_ok));
    rep.rows.push_back(
        int_row("pretzel_euler", 0, k.s_a - r_total - k.c, ps.euler_char, !hyp_ok));
  }

  if (!want_degree && !want_coeffs) return rep;

  std::vector<std::optional<LaurentPoly>> jones(n_last - n_first + 1);
  std::vector<EngineStats> stats(jones.size());
  const int threads = std::max(1, cfg.threads);
  EngineConfig inner = cfg;
  inner.threads = 1;
  std::vector<std::string> errors(jones.size());
  auto run = [&](std::size_t i) {
    try {
      jones[i] = colored_jones(d, n_first + static_cast<int>(i), inner, &stats[i]);
    } catch (const CapacityError& e) {
      errors[i] = "n=" + std::to_string(n_first + i) + ": " + e.what();
    }
  };
  for (std::size_t lo = 0; lo < jones.size(); lo += threads) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = lo; i < std::min(jones.size(), lo + threads); ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&, i] { run(i); }));
    for (auto& j : jobs) j.get();
  }
  for (std::size_t i = 0; i < jones.size(); ++i) {
    if (!errors[i].empty()) rep.engine_errors.push_back(errors[i]);
    rep.stats.states_evaluated += stats[i].states_evaluated;
    rep.stats.max_width = std::max(rep.stats.max_width, stats[i].max_width);
    rep.stats.crossings = std::max(rep.stats.crossings, stats[i].crossings);
    if (!stats[i].engine.empty()) rep.stats.engine = stats[i].engine;
  }

  if (want_degree) {
    const DegreePrediction pred = predict_min_degree(d, r_total, variant);
    for (std::size_t i = 0; i < jones.size(); ++i) {
      if (!jones[i]) continue;
      const int n = n_first + static_cast<int>(i);
      rep.rows.push_back(int_row("min_degree", n, pred.predict(n), jones[i]->min_deg(), !hyp_ok));
      rep.rows.push_back(
          int_row("max_degree", n, pred.predict_max(n), jones[i]->max_deg(), !max_ok));
    }
  }

  if (want_coeffs) {
    std::vector<LaurentPoly> reduced;
    int first_done = 0;
    for (std::size_t i = 0; i < jones.size(); ++i) {
      if (!jones[i]) break;
      if (reduced.empty()) first_done = n_first + static_cast<int>(i);
      reduced.push_back(reduce_colored_jones(*jones[i], n_first + static_cast<int>(i)));
    }
    const KauffmanState sigma =
        big_r == 0 ? KauffmanState::all(d, Smoothing::A) : pretzel_state(built, g);
    const int betti_sigma = resolve(d, sigma).betti1;
    const int betti_b = resolve(d, KauffmanState::all(d, Smoothing::B)).betti1;
    const int r_single = big_r == 1 ? r_total : 0;
    const StableCoeffReport sc = stable_coeffs(reduced, first_done, betti_sigma, betti_b, r_single);
    const bool adv = !hyp_ok || big_r > 1 || sc.inconclusive;
    for (const auto& o : sc.observed) {
      auto absval = [](const BigInt& x) { return BigInt(abs(x)).get_si(); };
      rep.rows.push_back(int_row("|alpha|", o.n, sc.predicted_alpha, absval(o.alpha), adv));
      rep.rows.push_back(int_row("|beta|", o.n, sc.predicted_beta, absval(o.beta), adv));
      rep.rows.push_back(int_row("|alpha'|", o.n, sc.predicted_alpha_p, absval(o.alpha_p), adv));
      rep.rows.push_back(int_row("|beta'|", o.n, sc.predicted_beta_p, absval(o.beta_p), adv));
    }
    if (sc.observed.size() >= 2) {
      rep.rows.push_back(VerifyRow{"coefficients stable", 0, "true",
                                   sc.alpha_stable && sc.beta_stable && sc.alpha_p_stable &&
                                           sc.beta_p_stable
                                       ? "true"
                                       : "false",
                                   sc.alpha_stable && sc.beta_stable && sc.alpha_p_stable &&
                                       sc.beta_p_stable,
                                   adv});
    }
  }
  return rep;
}

}  // namespace qlink
