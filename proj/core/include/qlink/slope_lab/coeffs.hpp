#pragma once

#include <string>
#include <vector>

#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

struct TailCoefficients {
  int n = 0;
  BigInt alpha, beta, alpha_p, beta_p;  // first, second, last, penultimate
  bool overlap = false;                 // degree span below 8
};

// Coefficients at offsets 0 and 4 from each end of a reduced colored Jones
// polynomial in v.
TailCoefficients tail_coefficients(const LaurentPoly& reduced, int n);

struct StableCoeffReport {
  std::vector<TailCoefficients> observed;
  long long predicted_alpha = 1, predicted_beta = 0;
  long long predicted_alpha_p = 1, predicted_beta_p = 0;
  bool alpha_stable = false, beta_stable = false;
  bool alpha_p_stable = false, beta_p_stable = false;
  bool matches = false;
  bool inconclusive = false;
  std::string beta_rule;
};

// betti_sigma: cycle rank of the reduced graph of the surface state; betti_b:
// of the reduced all-B graph. r = 0 means the adequate case.
StableCoeffReport stable_coeffs(const std::vector<LaurentPoly>& reduced_by_n, int n_first,
                                int betti_sigma, int betti_b, int r);

}  // namespace qlink
