#include "qlink/diagram/twist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qlink {

namespace {

struct BigonInfo {
  // other[4c+k] = corner across an alternating bigon, or -1
  std::vector<int> other;
};

BigonInfo alternating_bigons(const LinkDiagram& d) {
  BigonInfo b;
  b.other.assign(4 * d.crossing_count(), -1);
  for (const auto& f : diagram_faces(d)) {
    if (f.size() != 2) continue;
    const int x = f[0], y = f[1];
    if (x / 4 == y / 4) continue;
    // A-corners sit at odd slots, so equal parity means both corners agree
    if ((x % 4) % 2 != (y % 4) % 2) continue;
    b.other[x] = y;
    b.other[y] = x;
  }
  return b;
}

}  // namespace

std::vector<TwistRegion> twist_regions(const LinkDiagram& d) {
  const int n = d.crossing_count();
  BigonInfo b = alternating_bigons(d);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < 4 * n; ++x)
    if (b.other[x] >= 0) parent[find(x / 4)] = find(b.other[x] / 4);

  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[find(c)].push_back(c);
  std::vector<TwistRegion> out;
  for (auto& [root, members] : groups) {
    TwistRegion r;
    r.crossings = members;
    r.sign = d.crossings[members[0]].sign;
    for (int c : members)
      if (d.crossings[c].sign != r.sign) r.sign = 0;

    // chain detection: every crossing has its bigons at opposite corners
    bool chain = true;
    std::map<int, std::vector<int>> corners;
    for (int c : members) {
      for (int k = 0; k < 4; ++k)
        if (b.other[4 * c + k] >= 0) corners[c].push_back(k);
      const auto& ks = corners[c];
      if (ks.size() > 2 || (ks.size() == 2 && ks[1] - ks[0] != 2)) chain = false;
    }
    if (members.size() == 1) {
      r.chain = true;
      r.top_corner = {0};
    } else if (chain) {
      int start = -1;
      for (int c : members)
        if (corners[c].size() == 1) {
          start = c;
          break;
        }
      r.cyclic = start < 0;
      if (r.cyclic) start = members[0];
      std::vector<int> order, tops;
      int cur = start;
      int top = corners[start][0];
      std::set<int> seen;
      while (true) {
        order.push_back(cur);
        tops.push_back(top);
        seen.insert(cur);
        const int across = b.other[4 * cur + top];
        if (across < 0) break;
        const int next = across / 4;
        if (seen.count(next)) {
          if (!(r.cyclic && next == start)) chain = false;
          break;
        }
        cur = next;
        top = (across % 4 + 2) % 4;
      }
      if (chain && order.size() == members.size()) {
        r.chain = true;
        r.crossings = order;
        r.top_corner = tops;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<int, int>> twist_reduction_warnings(const LinkDiagram& d) {
  const auto regions = twist_regions(d);
  std::vector<int> region_of(d.crossing_count(), -1);
  for (int i = 0; i < static_cast<int>(regions.size()); ++i)
    for (int c : regions[i].crossings) region_of[c] = i;
  const auto partner = dart_partner(d);
  // arcs joining a pair of crossings in different regions
  std::map<std::pair<int, int>, std::set<int>> joins;
  for (int x = 0; x < static_cast<int>(partner.size()); ++x) {
    const int y = partner[x];
    const int cx = x / 4, cy = y / 4;
    if (region_of[cx] == region_of[cy]) continue;
    joins[{std::min(cx, cy), std::max(cx, cy)}].insert(d.crossings[cx].arcs[x % 4]);
  }
  std::set<std::pair<int, int>> out;
  for (const auto& [pair, arcs] : joins) {
    if (arcs.size() < 2) continue;
    out.emplace(std::min(region_of[pair.first], region_of[pair.second]),
                std::max(region_of[pair.first], region_of[pair.second]));
  }
  return {out.begin(), out.end()};
}

}  // namespace qlink
