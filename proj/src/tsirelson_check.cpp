#include "nsbox/tsirelson_check.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nsbox/analysis.hpp"

namespace nsbox {

TsirelsonCertificate verify_tsirelson_point(int depth_max, int series_terms) {
  if (depth_max < 1) throw std::domain_error("depth_max must be >= 1");
  if (series_terms < 2) throw std::domain_error("need at least 2 series terms");

  TsirelsonCertificate cert;
  cert.depth_max = depth_max;
  cert.series_terms = series_terms;
  cert.all_satisfied = true;
  cert.rows.reserve(static_cast<std::size_t>(depth_max));

  for (int n = 1; n <= depth_max; ++n) {
    DepthCertificate row;
    row.depth = n;
    const double y = std::exp2(-0.5 * n);  // E^n at E = 1/sqrt(2)

    // Direct: the entropy deficit never exceeds the threshold gap 2^-n.
    row.direct.lhs = binary_entropy_deficit(y);
    row.direct.rhs = std::exp2(static_cast<double>(-n));

    // Transformed: same statement multiplied out; log1p keeps the two
    // opposing terms accurate down to the 2^-64 scale.
    row.transformed.lhs = (std::log1p(-y * y) + y * (std::log1p(y) - std::log1p(-y))) /
                          std::numbers::ln2;
    row.transformed.rhs = std::exp2(static_cast<double>(1 - n));

    // Series: partial sum of 2^-((m-1)n+1)/(m(2m-1)), m = 1 contributing
    // exactly 1/2, bounded against ln 2.
    double partial = 0.5;
    for (int m = 2; m <= series_terms; ++m)
      partial += std::exp2(-(static_cast<double>(m - 1) * n + 1.0)) /
                 (static_cast<double>(m) * (2.0 * m - 1.0));
    const double tail =
        std::exp2(-(static_cast<double>(series_terms) * n + 1.0)) /
        ((series_terms + 1.0) * (2.0 * series_terms + 1.0) * (1.0 - std::exp2(static_cast<double>(-n))));
    row.series_partial_sum = partial;
    row.series_tail_bound = tail;
    row.series.lhs = partial + tail;
    row.series.rhs = std::numbers::ln2;

    for (RouteCheck* route : {&row.direct, &row.transformed, &row.series}) {
      route->margin = route->rhs - route->lhs;
      route->satisfied = route->lhs <= route->rhs;
      cert.all_satisfied = cert.all_satisfied && route->satisfied;
    }
    cert.rows.push_back(row);
  }
  return cert;
}

}  // namespace nsbox
