#include <gtest/gtest.h>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/corpus.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/engine/colored_jones.hpp"
#include "qlink/errors.hpp"
#include "qlink/graphmodel/paths.hpp"
#include "qlink/qalgebra/skein.hpp"
#include "qlink/slope_lab/coeffs.hpp"
#include "qlink/slope_lab/degrees.hpp"
#include "qlink/slope_lab/fit.hpp"
#include "qlink/slope_lab/gap.hpp"
#include "qlink/slope_lab/surface.hpp"
#include "qlink/slope_lab/twisting.hpp"
#include "qlink/slope_lab/verify.hpp"
#include "qlink/slope_lab/volume.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"

using namespace qlink;
using qlink::testing::Gen;
using qlink::testing::load_graph;

namespace {

std::vector<std::pair<int, long long>> samples(const DegreePrediction& p, int lo, int hi) {
  std::vector<std::pair<int, long long>> out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, p.predict(n));
  return out;
}

// the gap expression written out directly
Rational gap_by_hand(long long omega, int t, int r, int c) {
  const IntPartition p = minimal_partition(c, t);
  Rational s = 0;
  for (int m : p.parts) s += rat((omega - 2) * (2LL * m * m + 2LL * m) + 4LL * m * m);
  return -s - (rat(r) * (2 * c) * (2 * c) / 2 + rat(2LL * c * r));
}

}  // namespace

TEST(Degrees, TrefoilBounds) {
  const DiagramCounts k = diagram_counts(positive_trefoil());
  EXPECT_EQ(k.s_a, 2);
  EXPECT_EQ(h_lower(k, 2), 2);
  EXPECT_EQ(h_lower(k, 1), 0);
  EXPECT_EQ(h_upper(k, 1), 0);
  const LaurentPoly j = colored_jones(positive_trefoil(), 2);
  EXPECT_EQ(j.min_deg(), h_lower(k, 2));
  EXPECT_EQ(j.max_deg(), h_upper(k, 2));
}

TEST(Degrees, QuadraticsAgreeWithPointwiseBounds) {
  for (const CorpusEntry& e : graph_corpus(3, 8)) {
    const DiagramCounts k = diagram_counts(e.diagram);
    EXPECT_EQ(h_lower(k, 1), 0);
    for (int n = 1; n <= 6; ++n) {
      EXPECT_EQ(h_lower_quadratic(k).at(n), rat(h_lower(k, n)));
      EXPECT_EQ(h_upper_quadratic(k).at(n), rat(h_upper(k, n)));
    }
  }
}

TEST(Degrees, AdequateCorpusMatchesEngine) {
  int checked = 0;
  for (const CorpusEntry& e : graph_corpus(3, 7)) {
    if (!adequacy(e.diagram).adequate()) continue;
    const DiagramCounts k = diagram_counts(e.diagram);
    for (int n = 2; n <= 3; ++n) {
      const LaurentPoly j = colored_jones(e.diagram, n);
      EXPECT_EQ(j.min_deg(), h_lower(k, n)) << e.name;
      EXPECT_EQ(j.max_deg(), h_upper(k, n)) << e.name;
    }
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Degrees, NearAlternatingPrediction) {
  const LinkDiagram d = build_diagram(load_graph("fig1.json"));
  const DegreePrediction p = predict_min_degree(d, -2, DegreeVariant::kNearAlternating);
  EXPECT_EQ(p.predict(2), h_lower(p.counts, 2) + 8);
  EXPECT_EQ(p.predict(2), colored_jones(d, 2).min_deg());
  const DegreePrediction flat = predict_min_degree(d, 0, DegreeVariant::kAdequate);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(flat.predict(n), h_lower(flat.counts, n));
  const DegreePrediction multi = predict_min_degree(d, -4, DegreeVariant::kMultiTwist);
  EXPECT_EQ(multi.predict(3), h_lower(multi.counts, 3) + 48);
}

TEST(Fit, RecoversSlopeAndLinearTerm) {
  const LinkDiagram d = build_diagram(load_graph("fig1.json"));
  const DegreePrediction p = predict_min_degree(d, -2, DegreeVariant::kNearAlternating);
  const SlopeReport s = fit_quasi_quadratic(samples(p, 2, 5));
  ASSERT_TRUE(s.fit_verified);
  const DiagramCounts& k = p.counts;
  EXPECT_EQ(s.js, rat(-2 * k.c_neg + 4));
  EXPECT_EQ(s.jx, rat(k.c - k.s_a - 2));
  EXPECT_EQ(s.fit, p.min_degree);
}

TEST(Fit, ConstantAndNegativeControls) {
  const SlopeReport flat = fit_quasi_quadratic({{2, 5}, {3, 5}, {4, 5}, {5, 5}});
  EXPECT_TRUE(flat.fit_verified);
  EXPECT_EQ(flat.js, 0);
  EXPECT_EQ(flat.jx, 0);
  const SlopeReport bad = fit_quasi_quadratic({{2, 4}, {3, 9}, {4, 16}, {5, 29}});
  EXPECT_FALSE(bad.fit_verified);
  ASSERT_EQ(bad.residuals.size(), 1u);
  EXPECT_EQ(bad.residuals.front().first, 5);
  EXPECT_THROW(fit_quasi_quadratic({{2, 1}, {3, 2}, {4, 3}}), ArgumentError);
  EXPECT_THROW(fit_quasi_quadratic({{2, 1}, {3, 2}, {5, 3}, {6, 4}}), ArgumentError);
}

TEST(Surface, SlopesAndEuler) {
  const LinkDiagram pos = build_diagram(pretzel_graph({3, 3, 3}));
  EXPECT_EQ(surface_report(pos, KauffmanState::all(pos, Smoothing::A)).boundary_slope, 0);
  for (const CorpusEntry& e : random_pd_corpus(30, 9)) {
    const DiagramCounts k = diagram_counts(e.diagram);
    const SurfaceReport s = surface_report(e.diagram, KauffmanState::all(e.diagram, Smoothing::A));
    EXPECT_EQ(s.boundary_slope, -2 * k.c_neg);
    EXPECT_EQ(s.euler_char, k.s_a - k.c);
    EXPECT_EQ(s.boundary_components, component_count(e.diagram));
  }
  const WeightedPlanarGraph g = load_graph("fig1.json");
  const BuiltDiagram b = build_diagram_with_map(g);
  const DiagramCounts k = diagram_counts(b.diagram);
  const SurfaceReport s = surface_report(b.diagram, pretzel_state(b, g));
  EXPECT_EQ(s.boundary_slope, -2 * k.c_neg + 4);
  EXPECT_EQ(s.euler_char, k.s_a + 2 - k.c);
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap_bound({7, 3, -2, 1}), -16);
  EXPECT_EQ(gap_bound({7, 3, -2, 0}), 0);
}

TEST(Gap, NegativeOnHypothesisRegion) {
  Gen g(51);
  int sampled = 0;
  while (sampled < 2000) {
    const int t = g.range(3, 8);
    const int r = -g.range(2, 6);
    const long long omega = g.range(2, 80);
    if (rat(omega, t) <= rat(-r)) continue;
    const int c = g.range(1, 3 * t);
    const GapQuery q{omega, t, r, c};
    ASSERT_EQ(gap_bound(q), gap_by_hand(omega, t, r, c));
    EXPECT_LT(gap_bound(q), 0);
    EXPECT_LT(gap_bound_variant(q), 0);
    ++sampled;
  }
}

TEST(Coeffs, TailExtraction) {
  const LaurentPoly p('v', {{-8, 1}, {-4, -3}, {0, 7}, {4, 2}, {8, -1}});
  const TailCoefficients t = tail_coefficients(p, 2);
  EXPECT_EQ(t.alpha, 1);
  EXPECT_EQ(t.beta, -3);
  EXPECT_EQ(t.alpha_p, -1);
  EXPECT_EQ(t.beta_p, 2);
  EXPECT_FALSE(t.overlap);
  EXPECT_TRUE(tail_coefficients(LaurentPoly('v', {{0, 1}, {4, 1}}), 2).overlap);
}

TEST(Coeffs, UnknotIsTriviallyStable) {
  std::vector<LaurentPoly> red;
  for (int n = 2; n <= 4; ++n) red.push_back(reduced_colored_jones(unknot_diagram(), n));
  const StableCoeffReport r = stable_coeffs(red, 2, 0, 0, 0);
  EXPECT_TRUE(r.alpha_stable);
  ASSERT_FALSE(r.observed.empty());
  EXPECT_EQ(r.observed.front().alpha, 1);
}

TEST(Coeffs, AdequatePretzelMatchesBetti) {
  const LinkDiagram d = build_diagram(pretzel_graph({7, 7, 7}));
  std::vector<LaurentPoly> red;
  for (int n = 2; n <= 3; ++n) red.push_back(reduced_colored_jones(d, n));
  const int betti_a = resolve(d, KauffmanState::all(d, Smoothing::A)).betti1;
  const int betti_b = resolve(d, KauffmanState::all(d, Smoothing::B)).betti1;
  const StableCoeffReport r = stable_coeffs(red, 2, betti_a, betti_b, 0);
  EXPECT_EQ(r.predicted_beta, betti_a);
  EXPECT_TRUE(r.matches);
  EXPECT_TRUE(r.alpha_stable && r.beta_stable && r.alpha_p_stable && r.beta_p_stable);
  for (const auto& o : r.observed) EXPECT_EQ(abs(o.beta), betti_a);
}

TEST(Volume, PrintedConstants) {
  VolumeInputs in;
  in.tw = 4;
  in.min_region = 7;
  in.prime = in.twist_reduced = true;
  in.beta = 3;
  in.beta_p = 2;
  const VolumeReport fkp = volume_bounds(in, VolumeVariant::kFkpTwist);
  EXPECT_EQ(format_decimal(fkp.lower.value()), "2.12205");
  EXPECT_EQ(fkp.upper.b, 30);
  EXPECT_TRUE(fkp.ordered);
  EXPECT_FALSE(fkp.advisory);
  const VolumeReport na = volume_bounds(in, VolumeVariant::kNearAlternating);
  EXPECT_EQ(format_decimal(na.lower.value()), "1.41468");
  EXPECT_TRUE(na.ordered);
  const VolumeReport ad = volume_bounds(in, VolumeVariant::kAdequateCoeff);
  EXPECT_EQ(ad.lower.a, rat(7, 3));
  EXPECT_EQ(ad.upper.a, 8);
  EXPECT_EQ(format_decimal(v3_value(), 4), "1.0149");
  in.tw = 2;
  EXPECT_TRUE(volume_bounds(in, VolumeVariant::kFkpTwist).advisory);
}

TEST(Volume, MConstant) { EXPECT_EQ(m_constant(10, 7, -2), 5); }

TEST(Twisting, SquareNeedsThreeFullTwists) {
  const WeightedPlanarGraph g = load_graph("square_multi.json");
  const FullTwistSearch s = find_full_twists(g);
  ASSERT_TRUE(s.bounded);
  EXPECT_EQ(s.m, 3);
  EXPECT_TRUE(s.at_m.predicate);
  EXPECT_FALSE(multi_twist_profile(add_full_twists(g, 2)).predicate);
  // smallest m with (7 + 2m) / 3 > 4
  int m = 0;
  while (!(rat(7 + 2 * m, 3) > 4)) ++m;
  EXPECT_EQ(s.m, m);
}

TEST(Twisting, AlreadySatisfiedAndUnbounded) {
  const FullTwistSearch ok = find_full_twists(pretzel_graph({-2, 7, 7, 7}));
  EXPECT_TRUE(ok.bounded);
  EXPECT_EQ(ok.m, 0);
  const WeightedPlanarGraph bridge({{0, {{0, 0}}}, {1, {{0, 1}, {1, 0}}}, {2, {{1, 1}}}},
                                   {{0, {0, 1}, -2}, {1, {1, 2}, 3}});
  const FullTwistSearch none = find_full_twists(bridge);
  EXPECT_FALSE(none.bounded);
  EXPECT_FALSE(none.diagnosis.empty());
}

TEST(Verify, FigureOneDegreeAndSurface) {
  const VerificationReport r = verify(load_graph("fig1.json"), Theorem::kAll, 2, 3);
  EXPECT_EQ(r.variant, variant_name(DegreeVariant::kNearAlternating));
  for (const Hypothesis& h : r.hypotheses) EXPECT_TRUE(h.ok) << h.name;
  int degree_rows = 0;
  for (const VerifyRow& row : r.rows) {
    if (row.item == "min_degree" || row.item == "max_degree" || row.item.find("slope") != std::string::npos ||
        row.item == "pretzel_euler") {
      EXPECT_TRUE(row.pass) << row.item << " n=" << row.n;
      ++degree_rows;
    }
  }
  EXPECT_EQ(degree_rows, 7);
  EXPECT_TRUE(r.engine_errors.empty());
}

TEST(Verify, AdequatePretzel) {
  const VerificationReport r = verify(pretzel_graph({7, 7, 7}), Theorem::kDegree, 2, 3);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.rows.size(), 4u);
}

TEST(Verify, NegativeControlFlagsHypotheses) {
  const VerificationReport r = verify(pretzel_graph({-2, 5, 5, 5}), Theorem::kDegree, 2, 2);
  bool flagged = false;
  for (const Hypothesis& h : r.hypotheses) flagged = flagged || !h.ok;
  EXPECT_TRUE(flagged);
  ASSERT_FALSE(r.rows.empty());
  for (const VerifyRow& row : r.rows)
    if (row.item == "min_degree") EXPECT_TRUE(row.advisory);
}

TEST(Verify, TheoremNames) {
  for (Theorem t : {Theorem::kDegree, Theorem::kSurface, Theorem::kCoeffs, Theorem::kAll})
    EXPECT_EQ(parse_theorem(theorem_name(t)), t);
  EXPECT_THROW(parse_theorem("bogus"), ArgumentError);
}
