#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

inline constexpr int kMaxBoundary = 32;

// Perfect matching of boundary positions: key[i] is the partner of position i;
// unused positions hold 0xff.
using MatchKey = std::array<std::uint8_t, kMaxBoundary>;

struct MatchKeyHash {
  std::size_t operator()(const MatchKey& k) const noexcept;
};

// Skein element of a region of a diagram: a formal sum of crossingless
// matchings of its boundary arcs. Boundary arcs are kept sorted.
struct Tangle {
  std::vector<int> boundary;
  std::unordered_map<MatchKey, LaurentPoly, MatchKeyHash> terms;

  static Tangle empty();
  int width() const { return static_cast<int>(boundary.size()); }
  bool is_closed() const { return boundary.empty(); }
  // Value of a closed tangle.
  LaurentPoly value() const;
};

MatchKey blank_key();

// The two smoothings of one crossing. Arcs met twice (kinks) are closed up.
Tangle crossing_tangle(const Crossing& x);

// Joins two tangles along the arcs they share; closed loops contribute the
// loop value. Counts merged term pairs into *work when given.
Tangle glue(const Tangle& a, const Tangle& b, std::int64_t* work = nullptr);

// Renames boundary arcs; labels absent from the map are kept.
Tangle relabel(const Tangle& t, const std::map<int, int>& rename);

bool operator==(const Tangle& a, const Tangle& b);

}  // namespace qlink
