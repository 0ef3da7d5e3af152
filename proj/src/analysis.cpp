#include "nsbox/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsbox {

double binary_entropy_deficit(double y) {
  if (!(y >= -1.0 && y <= 1.0)) throw std::domain_error("correlation offset outside [-1,1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0 || y == -1.0) return 1.0;
  const double s = ((1.0 + y) * std::log1p(y) + (1.0 - y) * std::log1p(-y)) /
                   (2.0 * std::numbers::ln2);
  return std::min(std::max(s, 0.0), 1.0);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  // 2p and 2p-1 are exact for p in [1/4, 1], the regime the cascade lives
  // in; elsewhere the deficit form degrades gracefully to the naive one.
  return 1.0 - binary_entropy_deficit(2.0 * p - 1.0);
}

double binary_entropy_log10(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  const double q = 1.0 - p;
  return -(p * std::log10(p) + q * std::log10(q)) / 0.301;
}

double guess_probability(double correlation, int depth) {
  if (!(correlation >= -1.0 && correlation <= 1.0))
    throw std::domain_error("correlation outside [-1,1]");
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  return 0.5 * (1.0 + std::pow(correlation, depth));
}

double entropy_upper_bound(double y) {
  return 1.0 - y * y / (2.0 * std::numbers::ln2);
}

EntropyReport ic_entropy_report(double correlation, int depth) {
  EntropyReport r;
  r.correlation = correlation;
  r.depth = depth;
  r.guess_p = guess_probability(correlation, depth);
  r.entropy_bits = binary_entropy(r.guess_p);
  r.threshold = 1.0 - std::exp2(static_cast<double>(-depth));
  r.margin = r.threshold - r.entropy_bits;
  r.violated = r.entropy_bits < r.threshold;
  return r;
}

std::optional<int> min_violating_depth(double correlation, int depth_max) {
  if (depth_max < 1) throw std::domain_error("depth_max must be >= 1");
  for (int n = 1; n <= depth_max; ++n)
    if (ic_entropy_report(correlation, n).violated) return n;
  return std::nullopt;
}

DepthBound sufficient_violation_depth(double correlation, GapConvention convention) {
  if (!(correlation >= -1.0 && correlation <= 1.0))
    throw std::domain_error("correlation outside [-1,1]");
  DepthBound b;
  b.convention = convention;
  b.gap = (convention == GapConvention::two_e_squared)
              ? 2.0 * correlation * correlation - 1.0
              : correlation - kTsirelsonCorrelation;
  if (!(b.gap > 0.0) || correlation <= kTsirelsonCorrelation)
    throw std::domain_error("no violation below the quantum bound; need E > 1/sqrt(2)");
  b.threshold = (2.0 * std::numbers::ln2 - 1.0) / b.gap;
  b.depth = static_cast<int>(std::max(std::llround(b.threshold), 1ll));
  return b;
}

}  // namespace nsbox
