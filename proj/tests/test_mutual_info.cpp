#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nsbox/analysis.hpp"
#include "nsbox/game.hpp"
#include "nsbox/mutual_info.hpp"

using nsbox::GameConfig;
using nsbox::MutualInfoReport;
using nsbox::RoundTranscript;

TEST_CASE("plug-in mutual information on hand-built tables") {
  // independent
  CHECK(nsbox::plugin_mutual_information({{25, 25}, {25, 25}}) == doctest::Approx(0.0));
  // deterministic copy
  CHECK(nsbox::plugin_mutual_information({{50, 0}, {0, 50}}) == doctest::Approx(1.0));
  // symmetric channel with crossover ~0.146447: I = 1 - h(crossover)
  const double expected = 1.0 - nsbox::binary_entropy(146447.0 / 1000000.0);
  CHECK(nsbox::plugin_mutual_information({{853553, 146447}, {146447, 853553}}) ==
        doctest::Approx(expected).epsilon(1e-12));
  // empty marginals contribute nothing
  CHECK(nsbox::plugin_mutual_information({{10, 0}, {10, 0}}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(nsbox::plugin_mutual_information({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(nsbox::plugin_mutual_information({{1, -2}, {3, 4}}), std::invalid_argument);
}

namespace {

MutualInfoReport report_for(double correlation, int depth, std::int64_t trials,
                            std::uint64_t seed) {
  GameConfig cfg;
  cfg.depth = depth;
  cfg.correlation = correlation;
  cfg.trials = trials;
  cfg.seed = seed;
  std::vector<RoundTranscript> transcripts;
  nsbox::run_game(cfg, &transcripts);
  const double guess_p = nsbox::guess_probability(correlation, depth);
  return nsbox::mutual_info_report(transcripts, std::size_t{1} << depth, 1, guess_p);
}

}  // namespace

TEST_CASE("perfect boxes extract one full bit per target") {
  const MutualInfoReport r = report_for(1.0, 2, 20000, 301);
  REQUIRE(r.per_target_mi.size() == 4);
  CHECK(std::abs(r.total_mi - 4.0) < 0.01);
  CHECK(r.lower_bound == doctest::Approx(4.0));
  CHECK(r.violated);  // 4 bits through a 1-bit message
  CHECK(r.reliable);
}

TEST_CASE("white noise extracts nothing") {
  const MutualInfoReport r = report_for(0.0, 2, 20000, 302);
  CHECK(r.total_mi < 0.01);
  CHECK(r.lower_bound == doctest::Approx(0.0));
  CHECK_FALSE(r.violated);
}

TEST_CASE("at the quantum bound the channel is binary symmetric") {
  // each target sees a symmetric channel with crossover (1-E)/2, so the
  // plug-in sum approaches N(1 - h) = the lower bound exactly
  const MutualInfoReport r = report_for(nsbox::kTsirelsonCorrelation, 1, 100000, 303);
  const double closed_form = 0.7982479266142878;  // 2 (1 - h((1+E)/2)), offline
  CHECK(r.lower_bound == doctest::Approx(closed_form).epsilon(1e-12));
  CHECK(std::abs(r.total_mi - closed_form) <= 0.05);
  CHECK(r.total_mi >= r.lower_bound - 0.02);
  CHECK(r.message_budget == 1);
}

TEST_CASE("sparse targets flag the report unreliable") {
  GameConfig cfg;
  cfg.depth = 1;
  cfg.correlation = 0.5;
  cfg.trials = 150;  // ~75 rounds per target, below the 100 floor
  cfg.seed = 304;
  std::vector<RoundTranscript> transcripts;
  nsbox::run_game(cfg, &transcripts);
  const MutualInfoReport r =
      nsbox::mutual_info_report(transcripts, 2, 1, nsbox::guess_probability(0.5, 1));
  CHECK_FALSE(r.reliable);
}

TEST_CASE("report validation") {
  std::vector<RoundTranscript> empty;
  CHECK_THROWS_AS(nsbox::mutual_info_report(empty, 0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(nsbox::mutual_info_report(empty, 2, 0, 0.5), std::invalid_argument);

  RoundTranscript bad;
  bad.data = {0, 1};
  bad.target = 5;
  std::vector<RoundTranscript> rounds{bad};
  CHECK_THROWS_AS(nsbox::mutual_info_report(rounds, 2, 1, 0.5), std::invalid_argument);
}
