#pragma once

#include <map>
#include <vector>

#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

struct IntPartition {
  std::vector<int> parts;
  int n = 0;
  int t = 0;
  long long sum_squares() const;
  int max_part() const;
};

// [n] = (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})
LaurentPoly quantum_int(int n);
// (-1)^n [n], the closed Jones-Wenzl loop value.
LaurentPoly delta(int n);
// The loop value -A^2 - A^{-2}.
const LaurentPoly& loop_value();
// loop_value()^k, cached.
const LaurentPoly& loop_power(int k);
LaurentPoly delta_factorial(int n);
bool admissible(int a, int b, int c);
LaurentPoly theta(int a, int b, int c);
// theta as numerator / denominator with common Delta factors cancelled;
// the denominator is 1 exactly when theta is a Laurent polynomial.
std::pair<LaurentPoly, LaurentPoly> theta_ratio(int a, int b, int c);
// Coefficients of S_m with S_0 = 1, S_1 = x, S_{m+1} = x S_m - S_{m-1}.
std::map<int, BigInt> chebyshev_coeffs(int m);
IntPartition minimal_partition(int n, int t);

}  // namespace qlink
