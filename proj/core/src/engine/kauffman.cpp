#include "qlink/engine/kauffman.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

BiLaurentPoly kauffman_loop() {
  BiLaurentPoly m = BiLaurentPoly::monomial(1, -1, 1);
  m += BiLaurentPoly::monomial(-1, -1, 1);
  m -= BiLaurentPoly::constant(1);
  return m;
}

namespace {

// Unoriented diagram: partner over darts 4c+k, under[c] in {0, 1} marks the
// positions under[c] and under[c]+2 as the under-strand.
struct Proj {
  std::vector<int> partner;
  std::vector<int> under;
  int loops = 0;
  int n() const { return static_cast<int>(under.size()); }
};

Proj from_diagram(const LinkDiagram& d) {
  Proj p;
  p.partner = dart_partner(d);
  p.under.assign(d.crossing_count(), 0);
  p.loops = d.free_loops;
  return p;
}

// Removes crossing c, joining positions in pairs (k, k+1), (k+2, k+3).
Proj smooth(const Proj& p, int c, int k) {
  const int n = p.n();
  std::vector<int> join(4);
  for (int i = 0; i < 4; ++i) join[(k + i) % 4] = (k + (i ^ 1)) % 4;
  Proj q;
  q.loops = p.loops;
  std::vector<int> partner = p.partner;
  std::vector<char> seen(4, 0);
  for (int s = 0; s < 4; ++s) {
    const int outside = partner[4 * c + s];
    if (seen[s] || outside / 4 == c) continue;
    // walk from the outside dart through c until leaving again
    int pos = s;
    while (true) {
      seen[pos] = 1;
      const int nxt = join[pos];
      seen[nxt] = 1;
      const int far = partner[4 * c + nxt];
      if (far / 4 != c) {
        partner[outside] = far;
        partner[far] = outside;
        break;
      }
      pos = far % 4;
    }
  }
  for (int s = 0; s < 4; ++s) {
    if (seen[s]) continue;
    ++q.loops;
    int pos = s;
    while (!seen[pos]) {
      seen[pos] = 1;
      const int nxt = join[pos];
      seen[nxt] = 1;
      pos = partner[4 * c + nxt] % 4;
    }
  }
  auto renum = [&](int x) { return x / 4 > c ? x - 4 : x; };
  for (int x = 0; x < 4 * n; ++x) {
    if (x / 4 == c) continue;
    q.partner.push_back(renum(partner[x]));
  }
  for (int i = 0; i < n; ++i)
    if (i != c) q.under.push_back(p.under[i]);
  return q;
}

// Crossing-count pieces of the 4-valent map.
std::vector<std::vector<int>> pieces(const Proj& p) {
  const int n = p.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    std::vector<int> members;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      members.push_back(c);
      for (int k = 0; k < 4; ++k) {
        const int o = p.partner[4 * c + k] / 4;
        if (comp[o] < 0) {
          comp[o] = comp[s];
          stack.push_back(o);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

Proj restrict_to(const Proj& p, const std::vector<int>& members) {
  std::vector<int> idx(p.n(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) idx[members[i]] = i;
  Proj q;
  for (int c : members) {
    q.under.push_back(p.under[c]);
    for (int k = 0; k < 4; ++k) {
      const int x = p.partner[4 * c + k];
      q.partner.push_back(4 * idx[x / 4] + x % 4);
    }
  }
  return q;
}

// Code of a connected diagram read from a root dart, with crossings numbered
// in order of discovery and positions rotated to start at the entry dart.
std::vector<int> rooted_code(const Proj& p, int root) {
  const int n = p.n();
  std::vector<int> id(n, -1), rot(n, 0);
  std::vector<int> order;
  id[root / 4] = 0;
  rot[root / 4] = root % 4;
  order.push_back(root / 4);
  std::vector<int> code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    code.push_back((p.under[c] - rot[c] + 4) % 2);
    for (int k = 0; k < 4; ++k) {
      const int x = p.partner[4 * c + (rot[c] + k) % 4];
      const int o = x / 4;
      if (id[o] < 0) {
        id[o] = static_cast<int>(order.size());
        rot[o] = x % 4;
        order.push_back(o);
      }
      code.push_back(4 * id[o] + (x % 4 - rot[o] + 4) % 4);
    }
  }
  return code;
}

std::pair<std::vector<int>, Proj> canonical(const Proj& p) {
  std::vector<int> best;
  int best_root = 0;
  for (int r = 0; r < 4 * p.n(); ++r) {
    auto code = rooted_code(p, r);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_root = r;
    }
  }
  // rebuild the diagram in canonical numbering
  const int n = p.n();
  std::vector<int> id(n, -1), rot(n, 0), order;
  id[best_root / 4] = 0;
  rot[best_root / 4] = best_root % 4;
  order.push_back(best_root / 4);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    for (int k = 0; k < 4; ++k) {
      const int x = p.partner[4 * c + k];
      if (id[x / 4] < 0) {
        id[x / 4] = static_cast<int>(order.size());
        rot[x / 4] = x % 4;
        order.push_back(x / 4);
      }
    }
  }
  Proj q;
  q.partner.assign(4 * n, 0);
  q.under.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    q.under[id[c]] = (p.under[c] - rot[c] + 4) % 2;
    for (int k = 0; k < 4; ++k) {
      const int x = p.partner[4 * c + k];
      q.partner[4 * id[c] + (k - rot[c] + 4) % 4] = 4 * id[x / 4] + (x % 4 - rot[x / 4] + 4) % 4;
    }
  }
  return {best, q};
}

class Evaluator {
 public:
  explicit Evaluator(KauffmanStats* stats) : stats_(stats), loop_(kauffman_loop()) {}

  BiLaurentPoly eval(Proj p) {
    if (stats_) ++stats_->calls;
    BiLaurentPoly factor = BiLaurentPoly::constant(1);
    // curls: adjacent positions joined by an arc
    bool again = true;
    while (again) {
      again = false;
      for (int c = 0; c < p.n() && !again; ++c)
        for (int k = 0; k < 4; ++k)
          if (p.partner[4 * c + k] == 4 * c + (k + 1) % 4) {
            const bool positive = k % 2 == p.under[c] % 2;
            factor = factor.shifted(positive ? 1 : -1, 0);
            p = smooth(p, c, (k + 1) % 4);
            again = true;
            break;
          }
    }
    const auto parts = pieces(p);
    const int total = static_cast<int>(parts.size()) + p.loops;
    if (total == 0) return factor;
    for (int i = 1; i < total; ++i) factor = factor * loop_;
    for (const auto& members : parts) factor = factor * connected(restrict_to(p, members));
    return factor;
  }

 private:
  BiLaurentPoly connected(const Proj& p) {
    auto [code, q] = canonical(p);
    auto it = memo_.find(code);
    if (it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }
    BiLaurentPoly result = descend(q);
    memo_.emplace(std::move(code), result);
    return result;
  }

  // First crossing met on its under-strand along the traversal, or -1.
  static int first_ascending(const Proj& p, int& writhe, int& strands) {
    const int n = p.n();
    std::vector<char> met(n, 0), visited(4 * n, 0);
    std::vector<int> in_under(n, -1), in_over(n, -1);
    int bad = -1;
    strands = 0;
    for (int start = 0; start < 4 * n; ++start) {
      if (visited[start]) continue;
      ++strands;
      int out = start;
      while (!visited[out]) {
        visited[out] = 1;
        const int in = p.partner[out];
        visited[in] = 1;
        const int c = in / 4, pos = in % 4;
        const bool on_under = pos % 2 == p.under[c] % 2;
        if (on_under) in_under[c] = pos;
        else in_over[c] = pos;
        if (!met[c]) {
          met[c] = 1;
          if (on_under && bad < 0) bad = c;
        }
        out = 4 * c + (pos + 2) % 4;
      }
    }
    writhe = 0;
    for (int c = 0; c < n; ++c) writhe += in_over[c] == (in_under[c] + 3) % 4 ? 1 : -1;
    return bad;
  }

  BiLaurentPoly descend(Proj p) {
    const BiLaurentPoly z = BiLaurentPoly::monomial(0, 1, 1);
    BiLaurentPoly acc;
    int sign = 1;
    while (true) {
      int writhe = 0, strands = 0;
      const int c = first_ascending(p, writhe, strands);
      if (c < 0) {
        // descending: a stacked unlink, curls counted by the writhe
        BiLaurentPoly base = BiLaurentPoly::monomial(writhe, 0, 1);
        for (int i = 1; i < strands; ++i) base = base * loop_;
        acc += sign > 0 ? base : -base;
        return acc;
      }
      BiLaurentPoly both = eval(smooth(p, c, 0)) + eval(smooth(p, c, 1));
      BiLaurentPoly term = z * both;
      acc += sign > 0 ? term : -term;
      sign = -sign;
      p.under[c] ^= 1;
    }
  }

  KauffmanStats* stats_;
  BiLaurentPoly loop_;
  std::map<std::vector<int>, BiLaurentPoly> memo_;
};

}  // namespace

BiLaurentPoly kauffman_lambda(const LinkDiagram& d, const KauffmanConfig& cfg,
                              KauffmanStats* stats) {
  if (d.crossing_count() > cfg.max_crossings)
    throw CapacityError("Kauffman polynomial limited to " + std::to_string(cfg.max_crossings) +
                        " crossings");
  require_valid(d);
  Evaluator ev(stats);
  return ev.eval(from_diagram(d));
}

}  // namespace qlink
