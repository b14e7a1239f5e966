#include "qlink/diagram/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qlink/diagram/build.hpp"
#include "qlink/errors.hpp"

namespace qlink {

std::vector<int> embedding_code(const WeightedPlanarGraph& g) {
  const int darts = 2 * g.edge_count();
  if (darts == 0) return {g.vertex_count()};
  std::vector<int> next(darts), weight(darts);
  for (const auto& v : g.vertices()) {
    const auto& rot = v.rotation;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const auto& a = rot[i];
      const auto& b = rot[(i + 1) % rot.size()];
      next[2 * g.edge_index(a.edge) + a.end] = 2 * g.edge_index(b.edge) + b.end;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) weight[2 * e] = weight[2 * e + 1] = g.edges()[e].weight;

  std::vector<int> best;
  for (int start = 0; start < darts; ++start) {
    std::vector<int> label(darts, -1), order;
    label[start] = 0;
    order.push_back(start);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int y : {next[order[k]], order[k] ^ 1}) {
        if (label[y] >= 0) continue;
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    std::vector<int> code;
    code.reserve(3 * darts);
    for (int x : order) {
      code.push_back(label[next[x]]);
      code.push_back(label[x ^ 1]);
      code.push_back(weight[x]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

namespace {

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = nv;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

// Calls f for every rotation system of the given edge list.
template <typename F>
void each_rotation(int nv, const std::vector<std::pair<int, int>>& edges, F&& f) {
  std::vector<std::vector<HalfEdge>> around(nv);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    around[edges[e].first].push_back({e, 0});
    around[edges[e].second].push_back({e, 1});
  }
  std::vector<std::vector<HalfEdge>> rot = around;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == nv) {
      f(rot);
      return;
    }
    // first dart fixed, rest permuted
    std::vector<HalfEdge> tail(around[v].begin() + 1, around[v].end());
    std::sort(tail.begin(), tail.end());
    do {
      rot[v].assign(1, around[v][0]);
      rot[v].insert(rot[v].end(), tail.begin(), tail.end());
      self(self, v + 1);
    } while (std::next_permutation(tail.begin(), tail.end()));
  };
  rec(rec, 0);
}

WeightedPlanarGraph make_graph(const std::vector<std::vector<HalfEdge>>& rot,
                               const std::vector<std::pair<int, int>>& edges) {
  std::vector<GraphVertex> vs;
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) vs.push_back({v, rot[v]});
  std::vector<GraphEdge> es;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    es.push_back({e, {edges[e].first, edges[e].second}, 1});
  return WeightedPlanarGraph(vs, es);
}

std::string graph_name(const WeightedPlanarGraph& g) {
  std::string s = "graph:v" + std::to_string(g.vertex_count());
  for (const auto& e : g.edges())
    s += ":" + std::to_string(e.ends[0]) + "-" + std::to_string(e.ends[1]) + "/" +
         std::to_string(e.weight);
  return s;
}

}  // namespace

std::vector<WeightedPlanarGraph> embedded_shapes(int max_edges) {
  std::vector<WeightedPlanarGraph> out;
  std::set<std::vector<int>> seen;
  for (int ne = 1; ne <= max_edges; ++ne) {
    for (int nv = 2; nv <= ne + 1; ++nv) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) pairs.emplace_back(a, b);
      // multisets of ne pairs, as nondecreasing index sequences
      std::vector<int> pick(ne, 0);
      while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int p : pick) edges.push_back(pairs[p]);
        if (connected(nv, edges)) {
          each_rotation(nv, edges, [&](const std::vector<std::vector<HalfEdge>>& rot) {
            WeightedPlanarGraph g = make_graph(rot, edges);
            if (g.face_count() != ne - nv + 2) return;
            if (seen.insert(embedding_code(g)).second) out.push_back(g);
          });
        }
        int k = ne - 1;
        while (k >= 0 && pick[k] == static_cast<int>(pairs.size()) - 1) --k;
        if (k < 0) break;
        ++pick[k];
        for (int m = k + 1; m < ne; ++m) pick[m] = pick[k];
      }
    }
  }
  return out;
}

std::vector<CorpusEntry> graph_corpus(int max_edges, int max_crossings) {
  std::vector<CorpusEntry> out;
  std::set<std::vector<int>> seen;
  for (const auto& shape : embedded_shapes(max_edges)) {
    const int ne = shape.edge_count();
    if (ne > max_crossings) continue;
    std::vector<int> w(ne, -max_crossings);
    auto rec = [&](auto&& self, int e, int used) -> void {
      if (e == ne) {
        std::map<int, int> wm;
        for (int i = 0; i < ne; ++i) wm[shape.edges()[i].id] = w[i];
        WeightedPlanarGraph g = shape.with_weights(wm);
        if (!seen.insert(embedding_code(g)).second) return;
        out.push_back({graph_name(g), g, build_diagram(g)});
        return;
      }
      const int room = max_crossings - used - (ne - e - 1);
      for (int x = -room; x <= room; ++x) {
        if (x == 0) continue;
        w[e] = x;
        self(self, e + 1, used + std::abs(x));
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw ArgumentError("braid needs at least one strand");
  std::vector<int> cur(strands);
  std::iota(cur.begin(), cur.end(), 0);
  int fresh = strands;
  LinkDiagram d;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw ArgumentError("braid generator out of range");
    const int bl = cur[i], br = cur[i + 1], tl = fresh++, tr = fresh++;
    // ccw around the crossing: BL, BR, TR, TL; slot 0 is the incoming under-strand
    if (g > 0)
      d.crossings.push_back({{br, tr, tl, bl}, 1});
    else
      d.crossings.push_back({{bl, br, tr, tl}, -1});
    cur[i] = tl;
    cur[i + 1] = tr;
  }
  // close up: the top arc at each position is the bottom arc there
  std::map<int, int> rename;
  for (int p = 0; p < strands; ++p) rename[cur[p]] = p;
  int untouched = 0;
  for (int p = 0; p < strands; ++p)
    if (cur[p] == p) ++untouched;
  for (auto& x : d.crossings)
    for (int& a : x.arcs) {
      auto it = rename.find(a);
      if (it != rename.end()) a = it->second;
    }
  // squeeze labels to 0..2c-1
  std::map<int, int> dense;
  for (const auto& x : d.crossings)
    for (int a : x.arcs) dense.emplace(a, 0);
  int next = 0;
  for (auto& [a, v] : dense) v = next++;
  for (auto& x : d.crossings)
    for (int& a : x.arcs) a = dense[a];
  d.free_loops = untouched;
  require_valid(d);
  return relabel_canonical(d);
}

std::vector<CorpusEntry> random_pd_corpus(int count, int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  while (static_cast<int>(out.size()) < count) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const int len = (strands - 1) + static_cast<int>(rng() % (max_crossings - strands + 2));
    std::vector<int> word(len);
    std::vector<bool> used(strands - 1, false);
    for (int& g : word) {
      const int k = 1 + static_cast<int>(rng() % (strands - 1));
      used[k - 1] = true;
      g = rng() % 2 ? k : -k;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) continue;
    std::string name = "braid:" + std::to_string(strands) + ":";
    for (std::size_t i = 0; i < word.size(); ++i)
      name += (i ? "," : "") + std::to_string(word[i]);
    out.push_back({name, std::nullopt, braid_closure(strands, word)});
  }
  return out;
}

}  // namespace qlink
