#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nsbox/game.hpp"
#include "nsbox/mutual_info.hpp"
#include "stat_helpers.hpp"

using nsbox::BoxBehavior;
using nsbox::GameConfig;
using nsbox::GameReport;
using nsbox::MultibitReport;
using nsbox::RoundTranscript;

TEST_CASE("perfect boxes win every round") {
  GameConfig cfg;
  cfg.depth = 4;
  cfg.correlation = 1.0;
  cfg.trials = 2000;
  cfg.seed = 90;
  const GameReport report = nsbox::run_game(cfg);
  CHECK(report.empirical_success == 1.0);
  CHECK(report.analytic_success == 1.0);
  CHECK(report.data_bits == 16);
}

TEST_CASE("empirical success tracks (1 + E^n)/2") {
  GameConfig cfg;
  cfg.depth = 2;
  cfg.correlation = 0.5;
  cfg.trials = 20000;
  cfg.seed = 91;
  const GameReport report = nsbox::run_game(cfg);
  CHECK(report.analytic_success == doctest::Approx(0.625));
  CHECK(std::abs(report.empirical_success - report.analytic_success) <
        5 * report.standard_error);
  CHECK(report.standard_error == doctest::Approx(std::sqrt(0.625 * 0.375 / 20000)));
}

TEST_CASE("per-target tallies cover every index and sum to the trial count") {
  GameConfig cfg;
  cfg.depth = 2;
  cfg.correlation = 0.7;
  cfg.trials = 20000;
  cfg.seed = 92;
  const GameReport report = nsbox::run_game(cfg);
  REQUIRE(report.per_target_trials.size() == 4);
  REQUIRE(report.per_target_success.size() == 4);
  std::int64_t total = 0;
  std::vector<std::int64_t> counts;
  for (std::size_t k = 0; k < 4; ++k) {
    total += report.per_target_trials[k];
    counts.push_back(report.per_target_trials[k]);
    CHECK(report.per_target_success[k] >= 0.0);
    CHECK(report.per_target_success[k] <= 1.0);
  }
  CHECK(total == cfg.trials);
  // targets are drawn uniformly
  CHECK(nsbox_test::chi2_goodness_of_fit(counts, {0.25, 0.25, 0.25, 0.25}) <
        nsbox_test::chi2_critical_5sigma(3));
}

TEST_CASE("reruns with one seed are identical and other seeds differ") {
  GameConfig cfg;
  cfg.depth = 3;
  cfg.correlation = 0.6;
  cfg.trials = 5000;
  cfg.seed = 93;
  std::vector<RoundTranscript> ta, tb, tc;
  const GameReport a = nsbox::run_game(cfg, &ta);
  const GameReport b = nsbox::run_game(cfg, &tb);
  CHECK(a.empirical_success == b.empirical_success);
  CHECK(a.per_target_trials == b.per_target_trials);
  CHECK(a.per_target_success == b.per_target_success);
  for (std::size_t i = 0; i < ta.size(); ++i) {
    REQUIRE(ta[i].data == tb[i].data);
    REQUIRE(ta[i].target == tb[i].target);
    REQUIRE(ta[i].message == tb[i].message);
    REQUIRE(ta[i].guess == tb[i].guess);
  }
  cfg.seed = 94;
  nsbox::run_game(cfg, &tc);
  // messages are fair coin flips; 5000 of them agreeing across seeds is
  // beyond astronomically unlikely
  bool any_message_differs = false;
  for (std::size_t i = 0; i < tc.size(); ++i)
    any_message_differs = any_message_differs || (ta[i].message != tc[i].message);
  CHECK(any_message_differs);
}

TEST_CASE("correctness equals even parity of path faults") {
  GameConfig cfg;
  cfg.depth = 3;
  cfg.correlation = 0.6;
  cfg.trials = 5000;
  cfg.seed = 95;
  std::vector<RoundTranscript> transcripts;
  nsbox::run_game(cfg, &transcripts);
  REQUIRE(transcripts.size() == 5000);
  for (const RoundTranscript& t : transcripts) {
    int faults = 0;
    for (const auto& step : t.path) faults += step.faulted ? 1 : 0;
    REQUIRE(t.correct == (faults % 2 == 0));
    REQUIRE(t.correct == (t.guess == t.data[t.target]));
  }
}

TEST_CASE("the message carries no information about the target") {
  // x is fixed before b is drawn; their empirical mutual information is
  // bias-level only.
  GameConfig cfg;
  cfg.depth = 2;
  cfg.correlation = 0.9;
  cfg.trials = 20000;
  cfg.seed = 96;
  std::vector<RoundTranscript> transcripts;
  nsbox::run_game(cfg, &transcripts);
  std::vector<std::vector<std::int64_t>> counts(2, std::vector<std::int64_t>(4, 0));
  for (const RoundTranscript& t : transcripts)
    ++counts[static_cast<std::size_t>(t.message)][t.target];
  CHECK(nsbox::plugin_mutual_information(counts) < 2e-3);
}

TEST_CASE("an explicit behavior table drives the analytic column through K/4") {
  GameConfig cfg;
  cfg.depth = 2;
  cfg.behavior = BoxBehavior::isotropic(0.6);
  cfg.correlation = 0.123;  // ignored in favor of the table's strength
  cfg.trials = 20000;
  cfg.seed = 97;
  const GameReport report = nsbox::run_game(cfg);
  CHECK(report.correlation == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(report.analytic_success == doctest::Approx(0.5 * (1 + 0.36)).epsilon(1e-9));
  CHECK(std::abs(report.empirical_success - report.analytic_success) <
        5 * report.standard_error);
}

TEST_CASE("depth zero always succeeds") {
  GameConfig cfg;
  cfg.depth = 0;
  cfg.correlation = 0.0;
  cfg.trials = 500;
  cfg.seed = 98;
  const GameReport report = nsbox::run_game(cfg);
  CHECK(report.empirical_success == 1.0);
  CHECK(report.analytic_success == 1.0);
}

TEST_CASE("multibit rounds succeed only when every pyramid hits") {
  GameConfig cfg;
  cfg.depth = 1;
  cfg.correlation = 0.7;
  cfg.trials = 30000;
  cfg.seed = 99;
  cfg.message_bits = 2;
  const std::vector<std::size_t> targets{0, 1};
  const MultibitReport report = nsbox::run_game_multibit(cfg, targets);
  const double per_pyramid = 0.5 * (1 + 0.7);
  CHECK(report.analytic_success == doctest::Approx(per_pyramid * per_pyramid));
  CHECK(std::abs(report.empirical_success - report.analytic_success) <
        5 * report.standard_error);
  CHECK(report.targets == targets);
}

TEST_CASE("multibit with perfect boxes always wins") {
  GameConfig cfg;
  cfg.depth = 2;
  cfg.correlation = 1.0;
  cfg.trials = 1000;
  cfg.seed = 100;
  cfg.message_bits = 2;
  const std::vector<std::size_t> targets{1, 3};
  const MultibitReport report = nsbox::run_game_multibit(cfg, targets);
  CHECK(report.empirical_success == 1.0);
}

TEST_CASE("config validation") {
  GameConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(nsbox::run_game(cfg), std::invalid_argument);
  cfg.trials = 10;
  cfg.depth = -1;
  CHECK_THROWS_AS(nsbox::run_game(cfg), std::invalid_argument);
  cfg.depth = 1;
  CHECK_THROWS_AS(nsbox::run_game_multibit(cfg, std::vector<std::size_t>{0, 0}),
                  std::domain_error);
  CHECK_THROWS_AS(nsbox::run_game_multibit(cfg, std::vector<std::size_t>{5}),
                  std::domain_error);
  CHECK_THROWS_AS(nsbox::run_game_multibit(cfg, std::vector<std::size_t>{}),
                  std::domain_error);
}
