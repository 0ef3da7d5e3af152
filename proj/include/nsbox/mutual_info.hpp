#pragma once

#include <span>
#include <vector>

#include "nsbox/game.hpp"

namespace nsbox {

// Plug-in mutual information (bits) of a joint count table; zero-count rows
// and columns contribute nothing. Negative counts are rejected.
double plugin_mutual_information(const std::vector<std::vector<std::int64_t>>& counts);

struct MutualInfoReport {
  std::size_t data_bits = 0;  // N
  int message_budget = 0;     // m
  std::vector<double> per_target_mi;  // I(a_k : guess | target = k)
  std::vector<std::int64_t> per_target_samples;
  double total_mi = 0;     // sum over targets, in [0, N]
  double lower_bound = 0;  // N - N h(P_k) at the analytic guess chance
  bool violated = false;   // total_mi > message_budget
  bool reliable = true;    // every target saw at least 100 rounds
};

// Plug-in estimate of sum_k I(a_k : guess | target = k) from transcripts.
// Rounds are bucketed by target; each bucket contributes the empirical
// mutual information between the selected data bit and the guess.
// analytic_guess_p supplies the P_k used for the lower-bound column.
MutualInfoReport mutual_info_report(std::span<const RoundTranscript> rounds,
                                    std::size_t data_bits, int message_budget,
                                    double analytic_guess_p);

}  // namespace nsbox
