#include "qlink/engine/colored_jones.hpp"

#include <future>

#include "qlink/diagram/cable.hpp"
#include "qlink/engine/bracket.hpp"
#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink {

LaurentPoly cable_bracket(const LinkDiagram& d, const std::vector<int>& mult,
                          const EngineConfig& cfg, EngineStats* stats) {
  switch (cfg.engine) {
    case EngineKind::kBrute:
      return bracket_bruteforce(cable_components(d, mult).diagram, cfg, stats);
    case EngineKind::kSweep:
      return cabled_bracket(d, mult, cfg, stats);
    case EngineKind::kAuto:
      break;
  }
  try {
    return cabled_bracket(d, mult, cfg, stats);
  } catch (const CapacityError&) {
    LinkDiagram cab = cable_components(d, mult).diagram;
    if (cab.crossing_count() > cfg.brute_max_crossings) throw;
    return bracket_bruteforce(cab, cfg, stats);
  }
}

LaurentPoly colored_jones(const LinkDiagram& d, int n, const EngineConfig& cfg,
                          EngineStats* stats) {
  if (n < 1) throw ArgumentError("colored Jones needs n >= 1");
  const int k = component_count(d);
  const auto cheb = chebyshev_coeffs(n - 1);
  std::vector<std::pair<int, BigInt>> terms(cheb.begin(), cheb.end());

  // all tuples of per-component cable multiplicities
  std::vector<std::vector<int>> tuples;
  std::vector<BigInt> weights;
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<int> mult(k);
    BigInt w = 1;
    for (int i = 0; i < k; ++i) {
      mult[i] = terms[idx[i]].first;
      w *= terms[idx[i]].second;
    }
    tuples.push_back(mult);
    weights.push_back(w);
    int i = 0;
    while (i < k && ++idx[i] == static_cast<int>(terms.size())) idx[i++] = 0;
    if (i == k) break;
  }

  std::vector<LaurentPoly> values(tuples.size());
  std::vector<EngineStats> part(tuples.size());
  const int threads = std::max(1, cfg.threads);
  EngineConfig inner = cfg;
  inner.threads = 1;
  for (std::size_t lo = 0; lo < tuples.size(); lo += threads) {
    std::vector<std::future<void>> jobs;
    for (std::size_t t = lo; t < std::min(tuples.size(), lo + threads); ++t)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&, t] { values[t] = cable_bracket(d, tuples[t], inner, &part[t]); }));
    for (auto& j : jobs) j.get();
  }
  LaurentPoly sum('A');
  for (std::size_t t = 0; t < tuples.size(); ++t) sum.add_scaled_shifted(values[t], 0, weights[t]);
  if (stats) {
    for (const auto& p : part) {
      stats->states_evaluated += p.states_evaluated;
      stats->max_width = std::max(stats->max_width, p.max_width);
      stats->crossings = std::max(stats->crossings, p.crossings);
      if (!p.engine.empty()) stats->engine = p.engine;
    }
  }
  LaurentPoly out = sum.inverted('v');
  int writhe = 0;
  for (const auto& x : d.crossings) writhe += x.sign;
  const int shift = (n * n - 1) * writhe;
  const bool negate = (n - 1) % 2 == 1 && writhe % 2 != 0;
  out = out.shifted(shift);
  if (negate) out = -out;
  return out;
}

LaurentPoly unknot_colored_jones(int n) {
  if (n < 1) throw ArgumentError("colored Jones needs n >= 1");
  return delta(n - 1).inverted('v');
}

LaurentPoly reduce_colored_jones(const LaurentPoly& j, int n) {
  auto [q, exact] = j.divide_exact(unknot_colored_jones(n));
  if (!exact) throw ConsistencyError("colored Jones not divisible by the unknot value");
  q.set_var('v');
  return q;
}

LaurentPoly reduced_colored_jones(const LinkDiagram& d, int n, const EngineConfig& cfg,
                                  EngineStats* stats) {
  return reduce_colored_jones(colored_jones(d, n, cfg, stats), n);
}

}  // namespace qlink
