#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/cable.hpp"
#include "qlink/diagram/corpus.hpp"
#include "qlink/diagram/murasugi.hpp"
#include "qlink/diagram/pd_io.hpp"
#include "qlink/diagram/prime.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/diagram/twist.hpp"
#include "qlink/engine/bracket.hpp"
#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace qlink;
using qlink::testing::circles_by_walk;
using qlink::testing::Gen;
using qlink::testing::load_graph;

namespace {

KauffmanState random_state(Gen& g, const LinkDiagram& d) {
  KauffmanState s = KauffmanState::all(d, Smoothing::A);
  for (auto& c : s.choice) c = g.coin() ? Smoothing::A : Smoothing::B;
  return s;
}

LinkDiagram shuffled_crossings(const LinkDiagram& d, Gen& g) {
  LinkDiagram r = d;
  for (std::size_t i = r.crossings.size(); i > 1; --i)
    std::swap(r.crossings[i - 1], r.crossings[g.range(0, static_cast<int>(i) - 1)]);
  return r;
}

std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> out = graph_corpus(3, 7);
  for (auto& e : random_pd_corpus(30, 9)) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST(Build, PretzelExamples) {
  const LinkDiagram d = build_diagram(pretzel_graph({2, 2, 2}));
  EXPECT_EQ(d.crossing_count(), 6);
  EXPECT_TRUE(adequacy(d).adequate());
  const LinkDiagram k = build_diagram(load_graph("fig1.json"));
  EXPECT_EQ(k.crossing_count(), 23);
  EXPECT_EQ(component_count(k), 1);
  EXPECT_EQ(build_diagram(pretzel_graph({3, 2})).crossing_count(), 5);
  EXPECT_THROW(build_diagram(pretzel_graph({3, 0, 2})), ArgumentError);
}

TEST(Build, DeterministicAndValid) {
  for (const char* f : {"fig1.json", "k23_subdivided.json", "square_multi.json"}) {
    const WeightedPlanarGraph g = load_graph(f);
    const LinkDiagram a = build_diagram(g), b = build_diagram(g);
    EXPECT_EQ(format_pd(a), format_pd(b));
    const DiagramCheck c = check_diagram(a);
    EXPECT_TRUE(c.planar && c.connected && c.orientation_ok) << f << c.problem;
  }
}

TEST(Build, CrossingCountIsTotalWeight) {
  for (const CorpusEntry& e : graph_corpus(3, 8)) {
    int total = 0;
    for (const GraphEdge& x : e.graph->edges()) total += std::abs(x.weight);
    EXPECT_EQ(e.diagram.crossing_count(), total) << e.name;
  }
}

TEST(Build, AllPositiveGraphStateCounts) {
  for (const CorpusEntry& e : graph_corpus(4, 8)) {
    const WeightedPlanarGraph& g = *e.graph;
    if (!g.negative_edges().empty()) continue;
    int extra = 0;
    for (const GraphEdge& x : g.edges()) extra += x.weight - 1;
    EXPECT_EQ(circle_count(e.diagram, KauffmanState::all(e.diagram, Smoothing::B)), g.face_count()) << e.name;
    EXPECT_EQ(circle_count(e.diagram, KauffmanState::all(e.diagram, Smoothing::A)), g.vertex_count() + extra)
        << e.name;
  }
}

TEST(Build, MirrorMatchesNegatedGraph) {
  for (const char* f : {"fig1.json", "square_multi.json"}) {
    const WeightedPlanarGraph g = load_graph(f);
    const LinkDiagram m = mirror(build_diagram(g));
    const LinkDiagram n = build_diagram(negate_weights(g));
    EXPECT_EQ(counts(m).writhe, counts(n).writhe);
    EXPECT_EQ(counts(m).region_sizes, counts(n).region_sizes);
    for (Smoothing s : {Smoothing::A, Smoothing::B})
      EXPECT_EQ(circle_count(m, KauffmanState::all(m, s)), circle_count(n, KauffmanState::all(n, s)));
  }
  for (const CorpusEntry& e : graph_corpus(3, 6)) {
    const LinkDiagram n = build_diagram(negate_weights(*e.graph));
    EXPECT_EQ(bracket_bruteforce(mirror(e.diagram)), bracket_bruteforce(n)) << e.name;
  }
}

TEST(Counts, Examples) {
  const CrossingCounts t = counts(positive_trefoil());
  EXPECT_EQ(t.c, 3);
  EXPECT_EQ(t.writhe, 3);
  EXPECT_EQ(t.tw, 1);
  const CrossingCounts m = counts(mirror(positive_trefoil()));
  EXPECT_EQ(m.writhe, -3);
  EXPECT_EQ(m.c, 3);
  const CrossingCounts f = counts(build_diagram(load_graph("fig1.json")));
  EXPECT_EQ(f.tw, 4);
  EXPECT_EQ(f.region_sizes, (std::vector<int>{2, 7, 7, 7}));
  EXPECT_EQ(f.c, f.c_pos + f.c_neg);
  EXPECT_EQ(counts(figure_eight()).writhe, 0);
}

TEST(Counts, TwistRegionsFollowGraphEdges) {
  for (const CorpusEntry& e : graph_corpus(3, 8)) {
    const auto regions = twist_regions(e.diagram);
    int covered = 0;
    for (const TwistRegion& r : regions) {
      covered += r.size();
      EXPECT_NE(r.sign, 0);
    }
    EXPECT_EQ(covered, e.diagram.crossing_count());
  }
}

TEST(Resolve, TrefoilStates) {
  const LinkDiagram t = positive_trefoil();
  const StateGraphSummary a = resolve(t, KauffmanState::all(t, Smoothing::A));
  const StateGraphSummary b = resolve(t, KauffmanState::all(t, Smoothing::B));
  EXPECT_EQ(a.circles + b.circles, 5);
  const StateGraphSummary& two = a.circles == 2 ? a : b;
  EXPECT_EQ(two.edges.size(), 3u);
  EXPECT_EQ(two.reduced_edges, 1);
  EXPECT_EQ(two.betti1, 0);
  const LinkDiagram u = unknot_diagram();
  EXPECT_EQ(resolve(u, KauffmanState::all(u, Smoothing::A)).circles, 1);
}

TEST(Resolve, CircleCountMatchesWalk) {
  Gen g(31);
  for (const CorpusEntry& e : small_corpus())
    for (int k = 0; k < 4; ++k) {
      const KauffmanState s = random_state(g, e.diagram);
      const StateGraphSummary r = resolve(e.diagram, s);
      ASSERT_EQ(r.circles, circles_by_walk(e.diagram, s)) << e.name;
      EXPECT_EQ(r.betti1, r.reduced_edges - r.circles + r.graph_components);
    }
}

TEST(Resolve, OneFlipChangesCirclesByOne) {
  Gen g(32);
  for (const CorpusEntry& e : small_corpus()) {
    if (e.diagram.crossing_count() == 0) continue;
    KauffmanState s = random_state(g, e.diagram);
    const int before = circle_count(e.diagram, s);
    auto& c = s.choice[g.range(0, e.diagram.crossing_count() - 1)];
    c = c == Smoothing::A ? Smoothing::B : Smoothing::A;
    EXPECT_EQ(std::abs(circle_count(e.diagram, s) - before), 1) << e.name;
  }
}

TEST(Adequacy, Examples) {
  EXPECT_TRUE(adequacy(build_diagram(pretzel_graph({7, 7, 7}))).adequate());
  EXPECT_TRUE(adequacy(build_diagram(load_graph("fig1.json"))).b_adequate);
  const Adequacy kink_pos = adequacy(kinked_unknot(1)), kink_neg = adequacy(kinked_unknot(-1));
  EXPECT_NE(kink_pos.a_adequate, kink_pos.b_adequate);
  EXPECT_NE(kink_pos.a_adequate, kink_neg.a_adequate);
}

TEST(Adequacy, InvariantUnderRelabelling) {
  Gen g(33);
  for (const CorpusEntry& e : small_corpus()) {
    const Adequacy a = adequacy(e.diagram);
    const Adequacy b = adequacy(shuffled_crossings(e.diagram, g));
    const Adequacy c = adequacy(relabel_canonical(e.diagram));
    EXPECT_EQ(a.a_adequate, b.a_adequate);
    EXPECT_EQ(a.b_adequate, b.b_adequate);
    EXPECT_EQ(a.a_adequate, c.a_adequate);
    EXPECT_EQ(a.b_adequate, c.b_adequate);
  }
}

TEST(PretzelState, NegativeBandsGetB) {
  const BuiltDiagram pos = build_diagram_with_map(pretzel_graph({7, 7, 7}));
  EXPECT_EQ(pretzel_state(pos, pretzel_graph({7, 7, 7})).count(Smoothing::B), 0);
  const WeightedPlanarGraph fig = load_graph("fig1.json");
  EXPECT_EQ(pretzel_state(build_diagram_with_map(fig), fig).count(Smoothing::B), 2);
  const WeightedPlanarGraph sq = load_graph("square_multi.json");
  const BuiltDiagram b = build_diagram_with_map(sq);
  const KauffmanState s = pretzel_state(b, sq);
  EXPECT_EQ(s.count(Smoothing::B), 4);
  for (int eid : sq.negative_edges())
    for (int c : b.edge_crossings.at(eid)) EXPECT_EQ(s.choice[c], Smoothing::B);
}

TEST(Prime, Examples) {
  const LinkDiagram t = positive_trefoil();
  EXPECT_TRUE(is_prime(t));
  EXPECT_TRUE(is_prime(build_diagram(pretzel_graph({7, 7, 7}))));
  const LinkDiagram sum = connected_sum(t, 0, t, 0);
  EXPECT_EQ(sum.crossing_count(), 6);
  EXPECT_FALSE(is_prime(sum));
  EXPECT_TRUE(find_two_cut(sum).has_value());
}

TEST(Prime, ConnectedSumBracketIsMultiplicative) {
  Gen g(34);
  const auto corpus = random_pd_corpus(12, 5);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    const LinkDiagram& a = corpus[i].diagram;
    const LinkDiagram& b = corpus[i + 1].diagram;
    const LinkDiagram s = connected_sum(a, g.range(0, a.arc_count() - 1), b, g.range(0, b.arc_count() - 1));
    auto [q, ok] = (bracket_bruteforce(a) * bracket_bruteforce(b)).divide_exact(loop_value());
    ASSERT_TRUE(ok);
    EXPECT_EQ(bracket_bruteforce(s), q);
  }
}

TEST(Murasugi, GluingCounts) {
  const LinkDiagram d1 = build_diagram(load_graph("fig1.json"));
  const LinkDiagram d2 = positive_trefoil();
  const auto e1 = eligible_circles(d1), e2 = eligible_circles(d2);
  ASSERT_FALSE(e1.empty());
  ASSERT_FALSE(e2.empty());
  const MurasugiResult r = murasugi_sum(d1, e1.front(), d2, e2.front());
  EXPECT_EQ(r.diagram.crossing_count(), d1.crossing_count() + d2.crossing_count());
  EXPECT_EQ(r.circles, r.circles1 + r.circles2 - 1);
  EXPECT_EQ(circle_count(r.diagram, KauffmanState::all(r.diagram, Smoothing::A)), r.circles);
  const StateGraphSummary s = resolve(r.diagram, KauffmanState::all(r.diagram, Smoothing::A));
  const StateGraphSummary s1 = resolve(d1, KauffmanState::all(d1, Smoothing::A));
  const StateGraphSummary s2 = resolve(d2, KauffmanState::all(d2, Smoothing::A));
  EXPECT_EQ(s.edges.size(), s1.edges.size() + s2.edges.size());
  EXPECT_EQ(s.reduced_edges, s1.reduced_edges + s2.reduced_edges);
}

TEST(Murasugi, UnknotIsIdentity) {
  const LinkDiagram d = positive_trefoil();
  const MurasugiResult r = murasugi_sum(d, eligible_circles(d).front(), unknot_diagram(), 0);
  EXPECT_EQ(r.diagram.crossing_count(), 3);
  EXPECT_EQ(bracket_bruteforce(r.diagram), bracket_bruteforce(d));
}

TEST(Murasugi, IneligibleCircleRejected) {
  int rejected = 0;
  for (int sign : {1, -1}) {
    const LinkDiagram k = kinked_unknot(sign);
    const StateGraphSummary s = resolve(k, KauffmanState::all(k, Smoothing::A));
    for (int c = 0; c < s.circles; ++c) {
      if (s.loops_at_circle[c] == 0) continue;
      EXPECT_THROW(murasugi_sum(k, c, positive_trefoil(), 0), HypothesisError);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(Cable, CountsAndWrithe) {
  const LinkDiagram t = positive_trefoil();
  EXPECT_EQ(format_pd(relabel_canonical(cable(t, 1))), format_pd(relabel_canonical(t)));
  const LinkDiagram c2 = cable(t, 2);
  EXPECT_EQ(c2.crossing_count(), 12);
  EXPECT_EQ(component_count(c2), 2);
  EXPECT_EQ(cable(t, 0).crossing_count(), 0);
  for (int j = 1; j <= 3; ++j) {
    const LinkDiagram f = cable(figure_eight(), j);
    EXPECT_EQ(f.crossing_count(), 4 * j * j);
    EXPECT_EQ(counts(cable(t, j)).writhe, 3 * j * j);
  }
  EXPECT_THROW(cable(t, -1), ArgumentError);
}

TEST(PdIo, TextAndJsonRoundTrip) {
  for (const CorpusEntry& e : small_corpus()) {
    const std::string text = format_pd(e.diagram);
    EXPECT_EQ(format_pd(parse_pd(text)), text) << e.name;
    EXPECT_EQ(format_pd(diagram_from_json(diagram_to_json(e.diagram))), text);
  }
  const LinkDiagram u = parse_pd("# unknot\nLoop[0]\n");
  EXPECT_EQ(u.free_loops, 1);
  EXPECT_THROW(parse_pd("Xp[0,1,2]"), ArgumentError);
}
