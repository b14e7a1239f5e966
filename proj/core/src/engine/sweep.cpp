#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "qlink/diagram/cable.hpp"
#include "qlink/diagram/twist.hpp"
#include "qlink/engine/bracket.hpp"
#include "qlink/engine/tangle.hpp"
#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink {

EngineKind parse_engine(const std::string& s) {
  if (s == "auto") return EngineKind::kAuto;
  if (s == "brute") return EngineKind::kBrute;
  if (s == "sweep") return EngineKind::kSweep;
  throw ArgumentError("unknown engine '" + s + "'");
}

std::string engine_name(EngineKind k) {
  switch (k) {
    case EngineKind::kAuto:
      return "auto";
    case EngineKind::kBrute:
      return "brute";
    case EngineKind::kSweep:
      return "sweep";
  }
  return "auto";
}

namespace {

std::vector<SweepStep> make_blocks(const LinkDiagram& d, bool twists) {
  std::vector<SweepStep> blocks;
  for (const auto& r : twist_regions(d)) {
    if (twists && r.chain && !r.cyclic && r.size() >= 2) {
      blocks.push_back(SweepStep{r.crossings, true, 0});
      continue;
    }
    for (int c : r.crossings) blocks.push_back(SweepStep{{c}, false, 0});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const SweepStep& a, const SweepStep& b) { return a.crossings < b.crossings; });
  return blocks;
}

std::vector<int> arc_multiplicity(const LinkDiagram& d, const std::vector<int>& mult) {
  ComponentInfo info = components(d);
  if (static_cast<int>(mult.size()) != info.count)
    throw ArgumentError("need one multiplicity per component");
  std::vector<int> w(d.arc_count());
  for (int a = 0; a < d.arc_count(); ++a) w[a] = mult[info.arc_component[a]];
  return w;
}

}  // namespace

SweepPlan plan_sweep(const LinkDiagram& d, const std::vector<int>& mult, const EngineConfig& cfg) {
  const std::vector<int> arc_w = arc_multiplicity(d, mult);
  std::vector<SweepStep> blocks = make_blocks(d, cfg.twist_squaring);
  const int nb = static_cast<int>(blocks.size());
  // boundary arcs of each block: arcs met an odd number of times
  std::vector<std::vector<int>> ends(nb);
  for (int b = 0; b < nb; ++b) {
    std::map<int, int> seen;
    for (int c : blocks[b].crossings)
      for (int a : d.crossings[c].arcs) ++seen[a];
    for (auto [a, k] : seen)
      if (k % 2) ends[b].push_back(a);
  }
  std::vector<char> open(d.arc_count(), 0), used(nb, 0);
  int width = 0;
  SweepPlan plan;
  for (int step = 0; step < nb; ++step) {
    int best = -1, best_width = 0, best_shared = 0;
    for (int b = 0; b < nb; ++b) {
      if (used[b]) continue;
      int w = width, shared = 0;
      for (int a : ends[b]) {
        if (open[a]) {
          w -= arc_w[a];
          ++shared;
        } else {
          w += arc_w[a];
        }
      }
      if (best < 0 || w < best_width || (w == best_width && shared > best_shared)) {
        best = b;
        best_width = w;
        best_shared = shared;
      }
    }
    used[best] = 1;
    for (int a : ends[best]) open[a] ^= 1;
    width = best_width;
    blocks[best].width_after = width;
    plan.max_width = std::max(plan.max_width, width);
    plan.steps.push_back(blocks[best]);
  }
  return plan;
}

namespace {

Tangle crossing_block(const CableResult& cab, int c, std::int64_t* work) {
  Tangle t = Tangle::empty();
  for (int gc : cab.grid[c]) t = glue(t, crossing_tangle(cab.diagram.crossings[gc]), work);
  return t;
}

// Frame of a chain crossing with top corner s: positions of the cable arcs on
// the four sides, as abstract ids. Bottom ids 0..2j-1, top ids 2j..4j-1.
std::map<int, int> frame_ids(const CableResult& cab, int c, int s, int j, bool bottom, bool top) {
  const auto& sa = cab.slot_arcs[c];
  std::map<int, int> ids;
  for (int i = 0; i < j; ++i) {
    if (top) {
      ids[sa[s % 4][i]] = 2 * j + i;
      ids[sa[(s + 1) % 4][i]] = 3 * j + i;
    }
    if (bottom) {
      ids[sa[(s + 3) % 4][i]] = j - 1 - i;
      ids[sa[(s + 2) % 4][i]] = 2 * j - 1 - i;
    }
  }
  return ids;
}

std::map<int, int> inverse(const std::map<int, int>& m) {
  std::map<int, int> r;
  for (auto [k, v] : m) r[v] = k;
  return r;
}

// Stacks q on top of p; both use abstract frame ids.
Tangle stack(const Tangle& p, const Tangle& q, int j, std::int64_t* work) {
  std::map<int, int> up, down;
  for (int i = 0; i < 4 * j; ++i) up[i] = i + 2 * j;
  for (int i = 0; i < 2 * j; ++i) down[4 * j + i] = 2 * j + i;
  return relabel(glue(p, relabel(q, up), work), down);
}

bool chain_is_uniform(const CableResult& cab, const SweepStep& st, const std::vector<int>& tops,
                      int j) {
  for (int i = 0; i < static_cast<int>(st.crossings.size()); ++i) {
    const auto& sa = cab.slot_arcs[st.crossings[i]];
    for (const auto& side : sa)
      if (static_cast<int>(side.size()) != j) return false;
    if ((tops[i] - tops[0]) % 2 != 0) return false;
    if (i == 0) continue;
    const auto& prev = cab.slot_arcs[st.crossings[i - 1]];
    const int sp = tops[i - 1], s = tops[i];
    for (int x = 0; x < j; ++x) {
      if (prev[(sp + 1) % 4][x] != sa[(s + 2) % 4][j - 1 - x]) return false;
      if (prev[sp % 4][x] != sa[(s + 3) % 4][j - 1 - x]) return false;
    }
  }
  if (j < 1 || 4 * j > kMaxBoundary) return false;
  // the outer sides must be distinct arcs, or the frame cannot be relabelled back
  const auto& lo = cab.slot_arcs[st.crossings.front()];
  const auto& hi = cab.slot_arcs[st.crossings.back()];
  std::set<int> outer;
  for (int k : {(tops.front() + 2) % 4, (tops.front() + 3) % 4})
    outer.insert(lo[k].begin(), lo[k].end());
  for (int k : {tops.back() % 4, (tops.back() + 1) % 4}) outer.insert(hi[k].begin(), hi[k].end());
  return static_cast<int>(outer.size()) == 4 * j;
}

Tangle twist_block(const CableResult& cab, const SweepStep& st, const std::vector<int>& tops,
                   std::int64_t* work) {
  const int first = st.crossings.front(), last = st.crossings.back();
  const int j = static_cast<int>(cab.slot_arcs[first][0].size());
  const auto to_frame = frame_ids(cab, first, tops.front(), j, true, true);
  const Tangle unit = relabel(crossing_block(cab, first, work), to_frame);
  unsigned k = static_cast<unsigned>(st.crossings.size());
  Tangle base = unit;
  std::optional<Tangle> acc;
  while (k) {
    if (k & 1) acc = acc ? stack(*acc, base, j, work) : base;
    k >>= 1;
    if (k) base = stack(base, base, j, work);
  }
  std::map<int, int> back = inverse(frame_ids(cab, first, tops.front(), j, true, false));
  for (auto [arc, id] : frame_ids(cab, last, tops.back(), j, false, true)) back[id] = arc;
  return relabel(*acc, back);
}

}  // namespace

LaurentPoly cabled_bracket(const LinkDiagram& d, const std::vector<int>& mult,
                           const EngineConfig& cfg, EngineStats* stats) {
  require_valid(d);
  ComponentInfo info = components(d);
  if (static_cast<int>(mult.size()) != info.count)
    throw ArgumentError("need one multiplicity per component");
  std::vector<int> zero;
  for (int i = 0; i < info.count; ++i) {
    if (mult[i] < 0) throw ArgumentError("cable multiplicity must be >= 0");
    if (mult[i] == 0) zero.push_back(i);
  }
  if (!zero.empty()) {
    std::vector<int> old_to_new;
    LinkDiagram rest = remove_components_mapped(d, zero, old_to_new);
    std::vector<int> rest_mult(component_count(rest), 0);
    for (int i = 0; i < info.count; ++i)
      if (old_to_new[i] >= 0) rest_mult[old_to_new[i]] = mult[i];
    return cabled_bracket(rest, rest_mult, cfg, stats);
  }
  int loops = 0;
  for (int i = static_cast<int>(info.arcs.size()); i < info.count; ++i) loops += mult[i];
  if (d.crossings.empty()) {
    if (stats) stats->engine = "sweep";
    return loop_power(loops);
  }

  const SweepPlan plan = plan_sweep(d, mult, cfg);
  if (plan.max_width > cfg.sweep_max_width)
    throw CapacityError("sweep width " + std::to_string(plan.max_width) + " exceeds cap " +
                        std::to_string(cfg.sweep_max_width));
  const CableResult cab = cable_components(d, mult);
  std::map<std::vector<int>, std::vector<int>> chain_tops;
  for (const auto& r : twist_regions(d))
    if (r.chain) chain_tops[r.crossings] = r.top_corner;

  std::int64_t work = 0;
  Tangle front = Tangle::empty();
  for (const auto& st : plan.steps) {
    Tangle block;
    const auto tops = st.twist ? chain_tops.at(st.crossings) : std::vector<int>{};
    const int j = static_cast<int>(cab.slot_arcs[st.crossings[0]][0].size());
    if (st.twist && chain_is_uniform(cab, st, tops, j)) {
      block = twist_block(cab, st, tops, &work);
    } else {
      block = Tangle::empty();
      for (int c : st.crossings) block = glue(block, crossing_block(cab, c, &work), &work);
    }
    front = glue(front, block, &work);
  }
  LaurentPoly out = front.value() * loop_power(cab.diagram.free_loops);
  if (stats) {
    stats->engine = "sweep";
    stats->states_evaluated += work;
    stats->max_width = std::max(stats->max_width, plan.max_width);
    stats->crossings = cab.diagram.crossing_count();
  }
  return out;
}

LaurentPoly bracket_sweep(const LinkDiagram& d, const EngineConfig& cfg, EngineStats* stats) {
  return cabled_bracket(d, std::vector<int>(component_count(d), 1), cfg, stats);
}

LaurentPoly bracket(const LinkDiagram& d, const EngineConfig& cfg, EngineStats* stats) {
  switch (cfg.engine) {
    case EngineKind::kBrute:
      return bracket_bruteforce(d, cfg, stats);
    case EngineKind::kSweep:
      return bracket_sweep(d, cfg, stats);
    case EngineKind::kAuto:
      break;
  }
  try {
    return bracket_sweep(d, cfg, stats);
  } catch (const CapacityError&) {
    if (d.crossing_count() > cfg.brute_max_crossings) throw;
  }
  return bracket_bruteforce(d, cfg, stats);
}

}  // namespace qlink
