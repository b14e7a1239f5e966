#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "qlink/diagram/corpus.hpp"
#include "qlink/errors.hpp"
#include "qlink/graphmodel/classify.hpp"
#include "qlink/graphmodel/graph_io.hpp"
#include "qlink/graphmodel/paths.hpp"
#include "qlink/graphmodel/tutte.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"

using namespace qlink;
using qlink::testing::Gen;
using qlink::testing::load_graph;

namespace {

WeightedPlanarGraph path_graph_abc() {
  return WeightedPlanarGraph({{0, {{0, 0}}}, {1, {{0, 1}, {1, 0}}}, {2, {{1, 1}}}},
                             {{0, {0, 1}, 3}, {1, {1, 2}, 3}});
}

// lengths of all simple paths by a plain DFS over the edge list
std::vector<long long> dfs_path_lengths(const WeightedPlanarGraph& g, int skip, int from, int to,
                                        bool positive_only) {
  std::vector<long long> out;
  std::vector<int> seen;
  std::function<void(int, long long)> go = [&](int v, long long len) {
    if (v == to) {
      out.push_back(len);
      return;
    }
    seen.push_back(v);
    for (const GraphEdge& e : g.edges()) {
      if (e.id == skip || e.ends[0] == e.ends[1]) continue;
      for (int s = 0; s < 2; ++s) {
        if (e.ends[s] != v) continue;
        const int w = e.ends[1 - s];
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
        const long long add = positive_only && e.weight < 0 ? 0 : std::abs(e.weight) - 2;
        go(w, len + add);
      }
    }
    seen.pop_back();
  };
  go(from, 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> sorted_lengths(const PathProfile& p) {
  std::vector<long long> out;
  for (const GraphPath& w : p.paths) out.push_back(w.length);
  std::sort(out.begin(), out.end());
  return out;
}

// weighted versions of the small embedded shapes
std::vector<WeightedPlanarGraph> random_weighted(Gen& g, int max_edges, int per_shape) {
  std::vector<WeightedPlanarGraph> out;
  for (const WeightedPlanarGraph& s : embedded_shapes(max_edges))
    for (int k = 0; k < per_shape; ++k) {
      std::map<int, int> w;
      for (const GraphEdge& e : s.edges()) {
        int x = g.range(-4, 8);
        if (x == 0) x = 3;
        w[e.id] = x;
      }
      out.push_back(s.with_weights(w));
    }
  return out;
}

// Tutte polynomial from the subset expansion over all edge subsets
BiLaurentPoly tutte_by_subsets(const Multigraph& g) {
  const int m = static_cast<int>(g.edges.size());
  auto rank = [&](unsigned mask) {
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int r = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        const int a = find(g.edges[i].first), b = find(g.edges[i].second);
        if (a != b) {
          parent[a] = b;
          ++r;
        }
      }
    return r;
  };
  const BiLaurentPoly xm1 = BiLaurentPoly::monomial(1, 0, 1, 'x', 'y') - BiLaurentPoly::constant(1, 'x', 'y');
  const BiLaurentPoly ym1 = BiLaurentPoly::monomial(0, 1, 1, 'x', 'y') - BiLaurentPoly::constant(1, 'x', 'y');
  auto power = [](BiLaurentPoly b, int k) {
    BiLaurentPoly r = BiLaurentPoly::constant(1, 'x', 'y');
    for (int i = 0; i < k; ++i) r = r * b;
    return r;
  };
  const int full = rank((1u << m) - 1);
  BiLaurentPoly t('x', 'y');
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int r = rank(mask);
    t += power(xm1, full - r) * power(ym1, std::popcount(mask) - r);
  }
  return t;
}

}  // namespace

TEST(Validate, PretzelFamily) {
  const ValidationReport v = validate(pretzel_graph({-2, 7, 7, 7}));
  EXPECT_TRUE(v.planar);
  EXPECT_TRUE(v.two_connected);
  EXPECT_EQ(v.negative_edges.size(), 1u);
  EXPECT_EQ(v.faces, 4);
  EXPECT_TRUE(v.self_loops.empty());
}

TEST(Validate, PathGraphHasCutVertex) {
  const ValidationReport v = validate(path_graph_abc());
  EXPECT_TRUE(v.connected);
  EXPECT_FALSE(v.two_connected);
  EXPECT_EQ(v.cut_vertices, std::vector<int>{1});
}

TEST(Validate, SeparatedNegativeEdges) {
  const ValidationReport v = validate(load_graph("square_multi.json"));
  EXPECT_TRUE(v.planar);
  EXPECT_TRUE(v.two_connected);
  EXPECT_EQ(v.negative_edges.size(), 2u);
  EXPECT_TRUE(v.negative_components_single);
  const ValidationReport p = validate(pretzel_graph({-2, -3, 5}));
  EXPECT_FALSE(p.negative_components_single);
}

TEST(Validate, MalformedRotationIsStructural) {
  WeightedPlanarGraph bad({{0, {{0, 0}, {0, 0}}}, {1, {{0, 1}}}}, {{0, {0, 1}, 2}});
  EXPECT_THROW(validate(bad), StructuralError);
}

TEST(PathProfile, PretzelExample) {
  const WeightedPlanarGraph g = pretzel_graph({-2, 7, 7, 7});
  const PathProfile p = path_profile(g, 0);
  EXPECT_EQ(p.t, 3);
  EXPECT_EQ(p.omega, 7);
}

TEST(PathProfile, LengthFormula) {
  EXPECT_EQ(path_profile(pretzel_graph({-2, 9}), 0).omega, 9);
  const WeightedPlanarGraph tri({{0, {{0, 0}, {2, 1}}}, {1, {{1, 0}, {0, 1}}}, {2, {{2, 0}, {1, 1}}}},
                                {{0, {0, 1}, 5}, {1, {1, 2}, 4}, {2, {2, 0}, -2}});
  const PathProfile p = path_profile(tri, 2);
  EXPECT_EQ(p.t, 1);
  EXPECT_EQ(p.omega, 7);
}

TEST(PathProfile, DisconnectedGivesEmptyProfile) {
  const PathProfile p = path_profile(path_graph_abc(), 0);
  EXPECT_EQ(p.t, 0);
}

TEST(PathProfile, MatchesDfsOracle) {
  Gen gen(21);
  int checked = 0;
  for (const WeightedPlanarGraph& g : random_weighted(gen, 6, 2)) {
    for (const GraphEdge& e : g.edges()) {
      if (e.ends[0] == e.ends[1]) continue;
      for (bool pos : {false, true}) {
        const PathProfile p = path_profile(g, e.id, pos ? PathLengthMode::kPositiveOnly : PathLengthMode::kStandard);
        const auto want = dfs_path_lengths(g, e.id, e.ends[0], e.ends[1], pos);
        ASSERT_EQ(sorted_lengths(p), want);
        EXPECT_EQ(p.t, static_cast<long long>(want.size()));
        if (!want.empty()) EXPECT_EQ(p.omega, want.front());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Classify, PretzelVerdicts) {
  const ClassificationReport ok = near_alternating_check(pretzel_graph({-2, 7, 7, 7}));
  EXPECT_TRUE(ok.verdict);
  EXPECT_EQ(ok.ratio, rat(7, 3));
  const ClassificationReport slow = near_alternating_check(pretzel_graph({-2, 5, 5, 5}));
  EXPECT_FALSE(slow.ratio_above_r);
  EXPECT_FALSE(slow.verdict);
  const ClassificationReport thin = near_alternating_check(pretzel_graph({-2, 7, 7}));
  EXPECT_FALSE(thin.t_above_two);
  EXPECT_FALSE(thin.verdict);
}

TEST(Classify, FixtureGraphsAreNearAlternating) {
  for (const char* f : {"fig1.json", "p_3_10_11_11.json", "k23_subdivided.json"})
    EXPECT_TRUE(near_alternating_check(load_graph(f)).verdict) << f;
}

TEST(Classify, VerdictImpliesSingleEdgePredicate) {
  Gen gen(22);
  for (const WeightedPlanarGraph& g : random_weighted(gen, 5, 3)) {
    if (!near_alternating_check(g).verdict) continue;
    const MultiTwistProfile m = multi_twist_profile(g);
    EXPECT_EQ(m.R, 1);
    EXPECT_TRUE(m.predicate);
  }
  const MultiTwistProfile m = multi_twist_profile(pretzel_graph({-2, 7, 7, 7}));
  EXPECT_EQ(m.R, 1);
  EXPECT_TRUE(m.predicate);
}

TEST(MultiTwist, SquareInstance) {
  const WeightedPlanarGraph g = load_graph("square_multi.json");
  const MultiTwistProfile m = multi_twist_profile(g);
  EXPECT_EQ(m.R, 2);
  EXPECT_EQ(m.r, -2);
  EXPECT_EQ(m.t, 3);
  EXPECT_EQ(m.omega, 7);
  EXPECT_FALSE(m.predicate);
  EXPECT_TRUE(m.literal_predicate);
  long long last = m.omega;
  for (int k = 1; k <= 4; ++k) {
    const MultiTwistProfile mk = multi_twist_profile(add_full_twists(g, k));
    EXPECT_EQ(mk.R, m.R);
    EXPECT_EQ(mk.t, m.t);
    EXPECT_GE(mk.omega, last);
    last = mk.omega;
  }
  EXPECT_TRUE(multi_twist_profile(add_full_twists(g, 3)).predicate);
  EXPECT_THROW(multi_twist_profile(pretzel_graph({-2, -3, 5})), HypothesisError);
}

TEST(Transform, ContractAndTwist) {
  const WeightedPlanarGraph g = pretzel_graph({-2, 7, 7, 7});
  const WeightedPlanarGraph c = contract_edge(g, 0);
  EXPECT_EQ(c.vertex_count(), 1);
  EXPECT_EQ(c.edge_count(), 3);
  EXPECT_EQ(embedding_code(add_full_twists(g, 0)), embedding_code(g));
  EXPECT_EQ(add_full_twists(g, 3).edge(1).weight, 13);
  EXPECT_EQ(add_full_twists(g, 3).edge(0).weight, -2);
  EXPECT_THROW(contract_edge(c, 1), ArgumentError);
  EXPECT_THROW(add_full_twists(g, -1), ArgumentError);
  EXPECT_EQ(delete_edge(g, 0).edge_count(), 3);
}

TEST(Transform, CommuteWithRelabelling) {
  Gen gen(23);
  for (const WeightedPlanarGraph& g : random_weighted(gen, 5, 1)) {
    // shift every id and reverse the edge order
    std::vector<GraphVertex> vs;
    std::vector<GraphEdge> es;
    for (GraphVertex v : g.vertices()) {
      v.id += 100;
      for (HalfEdge& h : v.rotation) h.edge += 50;
      vs.push_back(v);
    }
    for (GraphEdge e : g.edges()) {
      e.id += 50;
      e.ends[0] += 100;
      e.ends[1] += 100;
      es.insert(es.begin(), e);
    }
    const WeightedPlanarGraph h(vs, es);
    EXPECT_EQ(embedding_code(h), embedding_code(g));
    for (const GraphEdge& e : g.edges()) {
      if (e.ends[0] == e.ends[1]) continue;
      EXPECT_EQ(embedding_code(contract_edge(h, e.id + 50)), embedding_code(contract_edge(g, e.id)));
      const WeightedPlanarGraph d = delete_edge(g, e.id);
      if (d.is_connected())
        EXPECT_EQ(embedding_code(delete_edge(h, e.id + 50)), embedding_code(d));
    }
  }
}

TEST(GraphJson, RoundTrip) {
  for (const char* f : {"fig1.json", "square_multi.json", "k23_subdivided.json"}) {
    const WeightedPlanarGraph g = load_graph(f);
    const Json j = graph_to_json(g);
    EXPECT_EQ(graph_to_json(graph_from_json(j)), j);
  }
}

TEST(Tutte, SmallExamples) {
  const BiLaurentPoly x = BiLaurentPoly::monomial(1, 0, 1, 'x', 'y');
  const BiLaurentPoly y = BiLaurentPoly::monomial(0, 1, 1, 'x', 'y');
  EXPECT_EQ(tutte_polynomial({2, {{0, 1}}}), x);
  EXPECT_EQ(tutte_polynomial({1, {{0, 0}}}), y);
  EXPECT_EQ(tutte_polynomial({3, {{0, 1}, {1, 2}, {2, 0}}}), x * x + x + y);
  Multigraph big{2, std::vector<std::pair<int, int>>(15, {0, 1})};
  EXPECT_THROW(tutte_polynomial(big), CapacityError);
}

TEST(Tutte, MatchesSubsetExpansion) {
  Gen gen(24);
  for (int it = 0; it < 60; ++it) {
    Multigraph g{gen.range(1, 5), {}};
    const int m = gen.range(0, 9);
    for (int i = 0; i < m; ++i) g.edges.emplace_back(gen.range(0, g.vertices - 1), gen.range(0, g.vertices - 1));
    const BiLaurentPoly t = tutte_polynomial(g);
    EXPECT_EQ(t, tutte_by_subsets(g)) << it;
  }
}

TEST(Tutte, DeletionContraction) {
  Gen gen(25);
  for (int it = 0; it < 60; ++it) {
    Multigraph g{gen.range(2, 5), {}};
    const int m = gen.range(1, 9);
    for (int i = 0; i < m; ++i) g.edges.emplace_back(gen.range(0, g.vertices - 1), gen.range(0, g.vertices - 1));
    const BiLaurentPoly t = tutte_polynomial(g);
    // T(2,2) = 2^|E|
    BigInt at22 = 0;
    for (const auto& [k, c] : t.terms()) at22 += c * (BigInt(1) << (k.first + k.second));
    EXPECT_EQ(at22, BigInt(1) << m);
    for (int i = 0; i < m; ++i) {
      auto [a, b] = g.edges[i];
      if (a == b) continue;
      Multigraph del = g, con{g.vertices - 1, {}};
      del.edges.erase(del.edges.begin() + i);
      auto remap = [&](int v) {
        if (v == b) v = a;
        return v > b ? v - 1 : v;
      };
      for (int j = 0; j < m; ++j)
        if (j != i) con.edges.emplace_back(remap(g.edges[j].first), remap(g.edges[j].second));
      // skip bridges: b unreachable from a once the edge is deleted
      std::vector<int> seen{a};
      for (std::size_t q = 0; q < seen.size(); ++q)
        for (auto [u, w] : del.edges) {
          if (u != seen[q]) std::swap(u, w);
          if (u == seen[q] && std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
        }
      const bool bridge = std::find(seen.begin(), seen.end(), b) == seen.end();
      if (bridge) continue;
      EXPECT_EQ(t, tutte_polynomial(del) + tutte_polynomial(con));
    }
  }
}
