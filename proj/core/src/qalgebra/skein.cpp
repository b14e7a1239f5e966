#include "qlink/qalgebra/skein.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

long long IntPartition::sum_squares() const {
  long long s = 0;
  for (int p : parts) s += 1LL * p * p;
  return s;
}

int IntPartition::max_part() const {
  return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
}

LaurentPoly quantum_int(int n) {
  if (n < 0) throw ArgumentError("quantum_int requires n >= 0");
  std::vector<LaurentPoly::Term> ts;
  for (int k = 0; k <= n; ++k) ts.emplace_back(2 * n - 4 * k, BigInt(1));
  return LaurentPoly('A', std::move(ts));
}

LaurentPoly delta(int n) {
  LaurentPoly q = quantum_int(n);
  if (n % 2) q = -q;
  return q;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly d = delta(1);
  return d;
}

const LaurentPoly& loop_power(int k) {
  static std::mutex mu;
  // deque keeps references stable while the cache grows
  static std::deque<LaurentPoly> cache{LaurentPoly::constant(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * loop_value());
  return cache[k];
}

// Negative arguments give the empty product.
LaurentPoly delta_factorial(int n) {
  LaurentPoly r = LaurentPoly::constant(1);
  for (int k = 1; k <= n; ++k) r *= delta(k);
  return r;
}

bool admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

std::pair<LaurentPoly, LaurentPoly> theta_ratio(int a, int b, int c) {
  if (!admissible(a, b, c))
    throw AdmissibilityError("theta: triple is not admissible");
  const int x = (a + b - c) / 2;
  const int y = (b + c - a) / 2;
  const int z = (a + c - b) / 2;
  // multiplicity of each Delta_k in numerator minus denominator
  std::map<int, int> mult;
  auto add = [&](int n, int s) {
    for (int k = 1; k <= n; ++k) mult[k] += s;
  };
  add(x + y + z, 1);
  add(x - 1, 1);
  add(y - 1, 1);
  add(z - 1, 1);
  add(y + z - 1, -1);
  add(z + x - 1, -1);
  add(x + y - 1, -1);
  LaurentPoly num = LaurentPoly::constant(1), den = LaurentPoly::constant(1);
  for (const auto& [k, m] : mult) {
    if (m > 0) num *= delta(k).pow(m);
    if (m < 0) den *= delta(k).pow(-m);
  }
  auto [q, exact] = num.divide_exact(den);
  if (exact) return {q, LaurentPoly::constant(1)};
  return {num, den};
}

LaurentPoly theta(int a, int b, int c) {
  auto [num, den] = theta_ratio(a, b, c);
  if (den != LaurentPoly::constant(1))
    throw ConsistencyError("theta: value is not a Laurent polynomial");
  return num;
}

std::map<int, BigInt> chebyshev_coeffs(int m) {
  if (m < 0) throw ArgumentError("chebyshev_coeffs requires m >= 0");
  std::map<int, BigInt> prev{{0, 1}};
  if (m == 0) return prev;
  std::map<int, BigInt> cur{{1, 1}};
  for (int k = 1; k < m; ++k) {
    std::map<int, BigInt> next;
    for (const auto& [j, c] : cur) next[j + 1] += c;
    for (const auto& [j, c] : prev) next[j] -= c;
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPartition minimal_partition(int n, int t) {
  if (t <= 0) throw ArgumentError("minimal_partition requires t >= 1");
  if (n < 0) throw ArgumentError("minimal_partition requires n >= 0");
  IntPartition p;
  p.n = n;
  p.t = t;
  if (n <= t) {
    p.parts.assign(t, 0);
    std::fill(p.parts.begin(), p.parts.begin() + n, 1);
    return p;
  }
  const int q = n / t;
  const int j = n % t;
  for (int i = 0; i < t; ++i) p.parts.push_back(i < j ? q + 1 : q);
  return p;
}

}  // namespace qlink
