#pragma once

#include <cstdint>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/qalgebra/bilaurent.hpp"

namespace qlink {

struct KauffmanConfig {
  int max_crossings = 12;
};

struct KauffmanStats {
  std::int64_t calls = 0;
  std::int64_t memo_hits = 0;
};

// Regular isotopy Kauffman polynomial in (a, z): Lambda(unknot) = 1, a positive
// curl multiplies by a, and L+ + L- = z (L0 + Linf).
BiLaurentPoly kauffman_lambda(const LinkDiagram& d, const KauffmanConfig& cfg = {},
                              KauffmanStats* stats = nullptr);

// (a + a^{-1}) / z - 1, the value of a split-off unknot.
BiLaurentPoly kauffman_loop();

}  // namespace qlink
