#pragma once

#include <cmath>
#include <vector>

namespace eiskern::summation {

template <class F>
AlternatingResult euler_alternating(F&& a, int direct_terms, int stages) {
  // Partial sums S_{direct_terms}, ..., S_{direct_terms + stages}.
  std::vector<double> s(static_cast<std::size_t>(stages) + 1);
  double acc = 0.0;
  int n = 1;
  for (; n <= direct_terms; ++n) acc += ((n & 1) ? 1.0 : -1.0) * a(n);
  for (int i = 0; i <= stages; ++i, ++n) {
    acc += ((n & 1) ? 1.0 : -1.0) * a(n);
    s[static_cast<std::size_t>(i)] = acc;
  }
  const std::vector<double> raw = s;
  double prev_gap = std::abs(s[1] - s[0]);
  for (int level = 0; level < stages; ++level) {
    const std::size_t len = s.size() - 1 - static_cast<std::size_t>(level);
    if (len == 1) prev_gap = std::abs(s[1] - s[0]);
    for (std::size_t i = 0; i < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
  }
  AlternatingResult out{s[0], 0.5 * prev_gap, n - 1};
  const double scale = std::abs(out.value);
  if (out.err_estimate > 1e-13 * scale) {
    // Not monotone enough for averaging: Aitken on the raw tail.
    const std::size_t m = raw.size();
    const double s0 = raw[m - 3], s1 = raw[m - 2], s2 = raw[m - 1];
    const double den = s2 - 2.0 * s1 + s0;
    if (den != 0.0) {
      const double ait = s2 - (s2 - s1) * (s2 - s1) / den;
      const double ait_err = std::abs(ait - s2);
      if (ait_err < out.err_estimate) out = {ait, ait_err, n - 1};
    }
  }
  return out;
}

}  // namespace eiskern::summation
