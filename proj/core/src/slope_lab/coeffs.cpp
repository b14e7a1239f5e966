#include "qlink/slope_lab/coeffs.hpp"

#include <cstdlib>

namespace qlink {

TailCoefficients tail_coefficients(const LaurentPoly& p, int n) {
  TailCoefficients t;
  t.n = n;
  if (p.is_zero()) return t;
  const int lo = p.min_deg(), hi = p.max_deg();
  t.alpha = p.coeff(lo);
  t.beta = p.coeff(lo + 4);
  t.alpha_p = p.coeff(hi);
  t.beta_p = p.coeff(hi - 4);
  t.overlap = hi - lo < 8;
  return t;
}

StableCoeffReport stable_coeffs(const std::vector<LaurentPoly>& reduced_by_n, int n_first,
                                int betti_sigma, int betti_b, int r) {
  StableCoeffReport rep;
  rep.predicted_beta = betti_sigma;
  rep.beta_rule = "adequate: |beta| = betti(s_A')";
  if (r != 0) {
    if (std::abs(r) == 2) {
      rep.predicted_beta = betti_sigma + 1;
      rep.beta_rule = "|r| = 2: |beta| = betti(s_sigma') + 1";
    } else {
      rep.beta_rule = "|r| > 2: |beta| = betti(s_sigma')";
    }
  }
  rep.predicted_beta_p = betti_b;
  for (std::size_t i = 0; i < reduced_by_n.size(); ++i) {
    rep.observed.push_back(tail_coefficients(reduced_by_n[i], n_first + static_cast<int>(i)));
    if (rep.observed.back().overlap) rep.inconclusive = true;
  }
  if (rep.observed.empty()) {
    rep.inconclusive = true;
    return rep;
  }
  auto constant = [&](auto get) {
    for (const auto& o : rep.observed)
      if (get(o) != get(rep.observed.front())) return false;
    return true;
  };
  // the whole tail may flip sign with n, so compare relative to sign(alpha)
  auto lead = [](const BigInt& a, const BigInt& x) { return sgn(a) < 0 ? BigInt(-x) : x; };
  rep.alpha_stable = constant([](const TailCoefficients& o) { return BigInt(abs(o.alpha)); });
  rep.beta_stable = constant([&](const TailCoefficients& o) { return lead(o.alpha, o.beta); });
  rep.alpha_p_stable = constant([](const TailCoefficients& o) { return BigInt(abs(o.alpha_p)); });
  rep.beta_p_stable =
      constant([&](const TailCoefficients& o) { return lead(o.alpha_p, o.beta_p); });
  rep.matches = !rep.inconclusive && rep.alpha_stable && rep.beta_stable && rep.alpha_p_stable &&
                rep.beta_p_stable;
  for (const auto& o : rep.observed) {
    auto is = [](const BigInt& x, long long want) { return BigInt(abs(x)) == BigInt(std::to_string(want)); };
    rep.matches = rep.matches && is(o.alpha, rep.predicted_alpha) && is(o.beta, rep.predicted_beta) &&
                  is(o.alpha_p, rep.predicted_alpha_p) && is(o.beta_p, rep.predicted_beta_p);
  }
  return rep;
}

}  // namespace qlink
