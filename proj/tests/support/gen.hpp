#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qlink/diagram/corpus.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink::testing {

// Small seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return lo + static_cast<int>(rng_() % (hi - lo + 1)); }
  bool coin() { return rng_() & 1; }

  BigInt coeff(bool allow_big) {
    BigInt c = range(-9, 9);
    if (allow_big && range(0, 4) == 0) {
      c *= BigInt("123456789012345678901234567");
      c += range(-5, 5);
    }
    return c;
  }

  LaurentPoly poly(char var = 'A', int max_terms = 6, bool allow_big = true) {
    std::vector<LaurentPoly::Term> t;
    const int k = range(0, max_terms);
    for (int i = 0; i < k; ++i) t.emplace_back(range(-12, 12), coeff(allow_big));
    return LaurentPoly(var, std::move(t));
  }

  std::vector<int> braid_word(int strands, int len) {
    std::vector<int> w(len);
    for (int& g : w) g = (coin() ? 1 : -1) * range(1, strands - 1);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qlink::testing
