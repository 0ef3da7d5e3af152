#include "nsbox/mutual_info.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbox/analysis.hpp"

namespace nsbox {

double plugin_mutual_information(const std::vector<std::vector<std::int64_t>>& counts) {
  if (counts.empty()) return 0.0;
  const std::size_t cols = counts.front().size();
  std::int64_t total = 0;
  std::vector<std::int64_t> row_sum(counts.size(), 0), col_sum(cols, 0);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r].size() != cols) throw std::invalid_argument("ragged count table");
    for (std::size_t c = 0; c < cols; ++c) {
      if (counts[r][c] < 0) throw std::invalid_argument("negative count");
      row_sum[r] += counts[r][c];
      col_sum[c] += counts[r][c];
      total += counts[r][c];
    }
  }
  if (total == 0) return 0.0;
  double mi = 0.0;
  const double n = static_cast<double>(total);
  for (std::size_t r = 0; r < counts.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t o = counts[r][c];
      if (o == 0) continue;
      mi += (static_cast<double>(o) / n) *
            std::log2(static_cast<double>(o) * n /
                      (static_cast<double>(row_sum[r]) * static_cast<double>(col_sum[c])));
    }
  return std::max(mi, 0.0);
}

MutualInfoReport mutual_info_report(std::span<const RoundTranscript> rounds,
                                    std::size_t data_bits, int message_budget,
                                    double analytic_guess_p) {
  if (data_bits == 0) throw std::invalid_argument("data_bits must be >= 1");
  if (message_budget < 1) throw std::invalid_argument("message budget must be >= 1");

  MutualInfoReport report;
  report.data_bits = data_bits;
  report.message_budget = message_budget;
  report.per_target_mi.assign(data_bits, 0.0);
  report.per_target_samples.assign(data_bits, 0);

  std::vector<std::array<std::int64_t, 4>> joint(data_bits, {0, 0, 0, 0});
  for (const auto& r : rounds) {
    if (r.target >= data_bits) throw std::invalid_argument("transcript target out of range");
    joint[r.target][static_cast<std::size_t>(r.data[r.target] * 2 + r.guess)] += 1;
    report.per_target_samples[r.target] += 1;
  }

  for (std::size_t k = 0; k < data_bits; ++k) {
    const auto& j = joint[k];
    report.per_target_mi[k] = plugin_mutual_information(
        {{j[0], j[1]}, {j[2], j[3]}});
    report.total_mi += report.per_target_mi[k];
    if (report.per_target_samples[k] < 100) report.reliable = false;
  }

  const double n = static_cast<double>(data_bits);
  report.lower_bound = n - n * binary_entropy(analytic_guess_p);
  report.violated = report.total_mi > static_cast<double>(message_budget);
  return report;
}

}  // namespace nsbox
