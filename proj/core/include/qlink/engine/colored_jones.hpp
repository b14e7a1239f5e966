#pragma once

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/engine/config.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

// Bracket of the cable with the given per-component multiplicities, using the
// configured engine.
LaurentPoly cable_bracket(const LinkDiagram& d, const std::vector<int>& mult,
                          const EngineConfig& cfg = {}, EngineStats* stats = nullptr);

// Unreduced colored Jones polynomial J(v, n) in v = 1/A, normalized so the
// unknot gives (-1)^{n-1}[n-1].
LaurentPoly colored_jones(const LinkDiagram& d, int n, const EngineConfig& cfg = {},
                          EngineStats* stats = nullptr);
// J(v, n) of the unknot.
LaurentPoly unknot_colored_jones(int n);
// J(v, n) / J_unknot(v, n); throws ConsistencyError on a remainder.
LaurentPoly reduce_colored_jones(const LaurentPoly& j, int n);
LaurentPoly reduced_colored_jones(const LinkDiagram& d, int n, const EngineConfig& cfg = {},
                                  EngineStats* stats = nullptr);

}  // namespace qlink
