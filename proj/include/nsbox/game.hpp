#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsbox/pyramid.hpp"

namespace nsbox {

struct GameConfig {
  int depth = 1;                        // n; the data vector holds 2^n bits
  double correlation = 1.0;             // isotropic E; ignored when behavior is set
  std::optional<BoxBehavior> behavior;  // explicit behavior for every box
  std::int64_t trials = 100000;
  std::uint64_t seed = 0x5EED;
  int message_bits = 1;                 // m, the message budget
  DecodeMode decode_mode = DecodeMode::path_only;
};

struct RoundTranscript {
  std::vector<int> data;
  std::size_t target = 0;         // b
  int message = 0;                // x, fixed before the target is drawn
  std::vector<int> path_outputs;  // Bob outputs along the path, root first
  int guess = 0;
  bool correct = false;
  std::vector<PathStep> path;     // per-box instrumentation
};

struct GameReport {
  int depth = 0;
  std::size_t data_bits = 0;
  double correlation = 0;  // E behind the analytic prediction (K/4 for explicit behaviors)
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double empirical_success = 0;
  double analytic_success = 0;  // (1 + E^n)/2
  double standard_error = 0;    // sqrt(p(1-p)/trials) at the analytic p
  std::vector<std::int64_t> per_target_trials;
  std::vector<double> per_target_success;
};

// Runs cfg.trials independent rounds: fresh pyramid, uniform data, encode,
// uniform target, decode, score. Fully deterministic given cfg.seed; every
// stream is keyed by (seed, trial, role), so capture or replay of any round
// is independent of the others. Pass a vector to also collect transcripts.
GameReport run_game(const GameConfig& cfg, std::vector<RoundTranscript>* transcripts = nullptr);

struct MultibitReport {
  int depth = 0;
  int message_bits = 0;
  std::int64_t trials = 0;
  double correlation = 0;
  double empirical_success = 0;  // every requested bit guessed right
  double analytic_success = 0;   // ((1 + E^n)/2)^m
  double standard_error = 0;
  std::vector<std::size_t> targets;
};

// m = targets.size() pyramids all encode the same data vector; pyramid i is
// decoded at targets[i] and the round succeeds when all m guesses are
// right. Duplicate or out-of-range targets throw std::domain_error.
MultibitReport run_game_multibit(const GameConfig& cfg, std::span<const std::size_t> targets);

}  // namespace nsbox
