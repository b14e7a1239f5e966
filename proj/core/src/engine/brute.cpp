#include <algorithm>
#include <numeric>
#include <thread>

#include "qlink/engine/bracket.hpp"
#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink {

namespace {

// count[a * (m + 1) + k]: states with a A-smoothings and k circles
using CountTable = std::vector<std::int64_t>;

void count_states(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, CountTable& out) {
  const int n = d.crossing_count();
  const int m = d.arc_count();
  std::vector<int> parent(m);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t s = begin; s < end; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int circles = m;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings[c].arcs;
      const bool b_side = (s >> c) & 1;
      a_count += !b_side;
      const int p0 = b_side ? 3 : 1;
      const int p1 = b_side ? 1 : 3;
      int u = find(x[0]), v = find(x[p0]);
      if (u != v) {
        parent[u] = v;
        --circles;
      }
      u = find(x[2]);
      v = find(x[p1]);
      if (u != v) {
        parent[u] = v;
        --circles;
      }
    }
    ++out[a_count * (m + 1) + circles];
  }
}

}  // namespace

LaurentPoly bracket_bruteforce(const LinkDiagram& d, const EngineConfig& cfg, EngineStats* stats) {
  const int n = d.crossing_count();
  if (n > cfg.brute_max_crossings)
    throw CapacityError("brute force limited to " + std::to_string(cfg.brute_max_crossings) +
                        " crossings, diagram has " + std::to_string(n));
  require_valid(d);
  const int m = d.arc_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const int workers =
      static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(cfg.threads, total >> 10)));
  std::vector<CountTable> tables(workers, CountTable((n + 1) * (m + 1), 0));
  if (workers == 1) {
    count_states(d, 0, total, tables[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { count_states(d, lo, hi, tables[w]); });
    }
    for (auto& t : pool) t.join();
  }
  LaurentPoly out('A');
  for (int a = 0; a <= n; ++a)
    for (int k = 0; k <= m; ++k) {
      std::int64_t cnt = 0;
      for (const auto& t : tables) cnt += t[a * (m + 1) + k];
      if (cnt == 0) continue;
      out.add_scaled_shifted(loop_power(k + d.free_loops), 2 * a - n, BigInt(static_cast<long>(cnt)));
    }
  if (stats) {
    stats->engine = "brute";
    stats->states_evaluated = static_cast<std::int64_t>(total);
    stats->crossings = n;
  }
  return out;
}

}  // namespace qlink
