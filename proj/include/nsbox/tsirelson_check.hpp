#pragma once

#include <vector>

namespace nsbox {

// Three independent numeric certificates that boxes at the quantum bound
// E = 1/sqrt(2) keep h(guess_p) >= 1 - 2^-n at every depth n. With
// y = E^n (so y^2 = 2^-n):
//
//   direct:      1 - h((1+y)/2)                        <= 2^-n
//   transformed: log2(1-y^2) + y log2((1+y)/(1-y))     <= 2^(1-n)
//   series:      S(n) = 1/2 + sum_{m>=2} 2^-((m-1)n+1)/(m(2m-1)) <= ln 2,
//                truncated after series_terms terms and topped up with the
//                geometric tail bound 2^-(Mn+1)/((M+1)(2M+1)(1-2^-n)).
//
// Algebraically the transformed line is twice the direct one and the series
// line is the transformed one rescaled by 2^(n-1)/log2(e); numerically the
// three take different cancellation paths, which is the point of checking
// all of them. All margins stay positive; the binding depth is n = 1, where
// the series partial sum starts at exactly 1/2.
struct RouteCheck {
  double lhs = 0, rhs = 0;
  double margin = 0;  // rhs - lhs
  bool satisfied = false;
};

struct DepthCertificate {
  int depth = 0;
  RouteCheck direct, transformed, series;
  double series_partial_sum = 0;
  double series_tail_bound = 0;
};

struct TsirelsonCertificate {
  int depth_max = 0;
  int series_terms = 0;
  bool all_satisfied = false;
  std::vector<DepthCertificate> rows;
};

TsirelsonCertificate verify_tsirelson_point(int depth_max, int series_terms = 50);

}  // namespace nsbox
