#pragma once

#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/engine/config.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

// Kauffman bracket with <empty> = 1 and <unknot> = -A^2 - A^{-2}.
LaurentPoly bracket_bruteforce(const LinkDiagram& d, const EngineConfig& cfg = {},
                               EngineStats* stats = nullptr);

// One step of a sweep: a block of original crossings, evaluated as one tangle.
struct SweepStep {
  std::vector<int> crossings;  // original crossings, chain order for twists
  bool twist = false;
  int width_after = 0;         // open cable arcs after the step
};

struct SweepPlan {
  std::vector<SweepStep> steps;
  int max_width = 0;
};

// Greedy block order for the cable of d with the given multiplicities.
SweepPlan plan_sweep(const LinkDiagram& d, const std::vector<int>& mult,
                     const EngineConfig& cfg = {});

LaurentPoly bracket_sweep(const LinkDiagram& d, const EngineConfig& cfg = {},
                          EngineStats* stats = nullptr);

// Bracket of the blackboard cable of d with multiplicity mult[i] on component i.
LaurentPoly cabled_bracket(const LinkDiagram& d, const std::vector<int>& mult,
                           const EngineConfig& cfg = {}, EngineStats* stats = nullptr);

// Dispatches on cfg.engine; auto picks brute force when small enough.
LaurentPoly bracket(const LinkDiagram& d, const EngineConfig& cfg = {},
                    EngineStats* stats = nullptr);

}  // namespace qlink
