#include "qlink/slope_lab/fit.hpp"

#include "qlink/errors.hpp"

namespace qlink {

SlopeReport fit_quasi_quadratic(const std::vector<std::pair<int, long long>>& samples) {
  if (samples.size() < 4) throw ArgumentError("a slope fit needs at least 4 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first != samples[i - 1].first + 1)
      throw ArgumentError("samples must be at consecutive n");
  SlopeReport rep;
  rep.n_first = samples.front().first;
  rep.n_last = samples.back().first;
  // Newton form through the first three points
  const Rational x0 = samples[0].first;
  const Rational y0 = rat(samples[0].second), y1 = rat(samples[1].second),
                 y2 = rat(samples[2].second);
  const Rational d1 = y1 - y0, d2 = y2 - y1;
  const Rational second = (d2 - d1) / 2;
  // y = y0 + d1 (x - x0) + second (x - x0)(x - x0 - 1)
  Quadratic q;
  q.a2 = second;
  q.a1 = d1 - second * (2 * x0 + 1);
  q.a0 = y0 - d1 * x0 + second * x0 * (x0 + 1);
  rep.fit = q;
  rep.js = q.a2;
  rep.jx = q.a1 / 2;
  rep.fit_verified = true;
  for (const auto& [n, y] : samples) {
    const Rational res = rat(y) - q.at(n);
    if (res != 0) {
      rep.fit_verified = false;
      rep.residuals.emplace_back(n, res);
    }
  }
  return rep;
}

}  // namespace qlink
