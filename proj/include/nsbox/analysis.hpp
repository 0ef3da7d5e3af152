#pragma once

#include <optional>

namespace nsbox {

// Largest correlation a quantum realization allows, E = 1/sqrt(2). The
// literal rounds to the same double as std::sqrt(0.5).
inline constexpr double kTsirelsonCorrelation = 0.70710678118654752440;

// Shannon entropy of a {p, 1-p} source in bits, with 0 log 0 = 0. Throws
// std::domain_error outside [0,1]. Evaluated through log1p of the offset
// y = 2p - 1 from the peak, which keeps 1 - h accurate to ~6 significant
// digits even when it is below 1e-19; the naive p log p form would lose the
// comparison h vs 1 - 2^-n entirely for depths past ~30.
double binary_entropy(double p);

// 1 - h((1+y)/2) for y in [-1,1], without forming the difference from 1.
double binary_entropy_deficit(double y);

// Binary entropy via base-10 logarithms and the truncated conversion
// log2(x) ~= log10(x)/0.301, the convention behind the hand-computed
// reference values this toolkit reproduces. Overstates h by the factor
// log10(2)/0.301 ~= 1.0000997, which is why the reproduction table carries
// this column separately from the exact one.
double binary_entropy_log10(double p);

// (1 + E^n)/2: the per-target success chance of a depth-n cascade of
// isotropic boxes with correlation E. depth must be >= 1.
double guess_probability(double correlation, int depth);

// Quadratic bound h((1+y)/2) <= 1 - y^2/(2 ln 2), tight at y = 0.
double entropy_upper_bound(double y);

struct EntropyReport {
  double correlation = 0;
  int depth = 0;
  double guess_p = 0;       // (1 + E^n)/2
  double entropy_bits = 0;  // h(guess_p)
  double threshold = 0;     // 1 - 2^-n
  double margin = 0;        // threshold - entropy_bits
  bool violated = false;    // entropy_bits < threshold
};

// Information causality holds iff every depth keeps h(guess_p) >= 1 - 2^-n.
// The comparison is a plain double comparison with no epsilon.
EntropyReport ic_entropy_report(double correlation, int depth);

// Smallest depth in [1, depth_max] whose report is violated, if any. Never
// finds one for correlations at or below kTsirelsonCorrelation.
std::optional<int> min_violating_depth(double correlation, int depth_max);

enum class GapConvention {
  two_e_squared,         // a = 2E^2 - 1
  delta_from_tsirelson,  // a = E - 1/sqrt(2)
};

struct DepthBound {
  GapConvention convention{};
  double gap = 0;        // the "a" above
  double threshold = 0;  // (2 ln 2 - 1)/a
  int depth = 0;         // published rounding: nearest integer, at least 1
};

// Depth scale from the linearized sufficient condition (2E^2)^n > 2 ln 2,
// namely n ~ (2 ln 2 - 1)/a. Returns the nearest integer (never below 1),
// which matches the published figures for both gap conventions; callers who
// need the continuous value can read .threshold. Throws std::domain_error
// for correlations at or below kTsirelsonCorrelation, where no violation
// exists at any depth.
DepthBound sufficient_violation_depth(double correlation, GapConvention convention);

}  // namespace nsbox
