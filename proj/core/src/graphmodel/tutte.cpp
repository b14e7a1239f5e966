#include "qlink/graphmodel/tutte.hpp"

#include <functional>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

bool connected_without(const Multigraph& g, std::size_t skip, int a, int b) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != skip) parent[find(g.edges[i].first)] = find(g.edges[i].second);
  return find(a) == find(b);
}

BiLaurentPoly tutte_rec(const Multigraph& g) {
  if (g.edges.empty()) return BiLaurentPoly::constant(1, 'x', 'y');
  const auto [u, w] = g.edges.back();
  Multigraph rest = g;
  rest.edges.pop_back();
  if (u == w) return BiLaurentPoly::monomial(0, 1, 1, 'x', 'y') * tutte_rec(rest);
  if (!connected_without(g, g.edges.size() - 1, u, w)) {
    // bridge: T(G) = x T(G/e)
    Multigraph c = rest;
    for (auto& [a, b] : c.edges) {
      if (a == w) a = u;
      if (b == w) b = u;
    }
    return BiLaurentPoly::monomial(1, 0, 1, 'x', 'y') * tutte_rec(c);
  }
  Multigraph c = rest;
  for (auto& [a, b] : c.edges) {
    if (a == w) a = u;
    if (b == w) b = u;
  }
  return tutte_rec(rest) + tutte_rec(c);
}

}  // namespace

BiLaurentPoly tutte_polynomial(const Multigraph& g, int edge_cap) {
  if (static_cast<int>(g.edges.size()) > edge_cap)
    throw CapacityError("tutte_polynomial: " + std::to_string(g.edges.size()) +
                        " edges exceeds cap " + std::to_string(edge_cap));
  for (const auto& [a, b] : g.edges)
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices)
      throw ArgumentError("tutte_polynomial: edge endpoint out of range");
  return tutte_rec(g);
}

}  // namespace qlink
