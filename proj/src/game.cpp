#include "nsbox/game.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "nsbox/analysis.hpp"

namespace nsbox {

namespace {

// Stream labels under a trial key. Values are arbitrary but frozen: changing
// them silently reshuffles every seeded experiment.
enum StreamTag : std::uint64_t { kDataStream = 1, kTargetStream = 2, kBoxStream = 3 };

struct Setup {
  BoxBehavior behavior;
  double correlation;
};

Setup resolve(const GameConfig& cfg) {
  if (cfg.behavior) {
    // The analytic column uses the behavior's CHSH strength; exact only for
    // the isotropic family, a labelled estimate otherwise.
    return {*cfg.behavior, cfg.behavior->chsh_value() / 4.0};
  }
  return {BoxBehavior::isotropic(cfg.correlation), cfg.correlation};
}

void check_common(const GameConfig& cfg) {
  if (cfg.depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.message_bits < 1) throw std::invalid_argument("message budget must be >= 1");
}

}  // namespace

GameReport run_game(const GameConfig& cfg, std::vector<RoundTranscript>* transcripts) {
  check_common(cfg);
  const Setup setup = resolve(cfg);
  const std::size_t data_bits = std::size_t{1} << cfg.depth;

  GameReport report;
  report.depth = cfg.depth;
  report.data_bits = data_bits;
  report.correlation = setup.correlation;
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.per_target_trials.assign(data_bits, 0);
  report.per_target_success.assign(data_bits, 0.0);

  std::vector<int> data(data_bits);
  std::int64_t hits = 0;
  std::vector<std::int64_t> per_target_hits(data_bits, 0);

  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_key = derive_key(cfg.seed, static_cast<std::uint64_t>(trial));
    CounterRng data_rng(derive_key(trial_key, kDataStream));
    for (auto& bit : data) bit = data_rng.next_bit();

    PyramidStrategy pyramid(setup.behavior, cfg.depth, derive_key(trial_key, kBoxStream));
    const int message = pyramid.encode(data);

    CounterRng target_rng(derive_key(trial_key, kTargetStream));
    const std::size_t target = target_rng.next_below(data_bits);

    DecodeResult decoded = pyramid.decode(message, target, cfg.decode_mode);
    const bool correct = decoded.guess == data[target];

    hits += correct ? 1 : 0;
    per_target_hits[target] += correct ? 1 : 0;
    report.per_target_trials[target] += 1;

    if (transcripts) {
      RoundTranscript t;
      t.data = data;
      t.target = target;
      t.message = message;
      t.path_outputs.reserve(decoded.path.size());
      for (const auto& step : decoded.path) t.path_outputs.push_back(step.bob_output);
      t.guess = decoded.guess;
      t.correct = correct;
      t.path = std::move(decoded.path);
      transcripts->push_back(std::move(t));
    }
  }

  report.empirical_success = static_cast<double>(hits) / static_cast<double>(cfg.trials);
  report.analytic_success =
      cfg.depth == 0 ? 1.0 : guess_probability(setup.correlation, cfg.depth);
  const double p = report.analytic_success;
  report.standard_error = std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(cfg.trials));
  for (std::size_t k = 0; k < data_bits; ++k)
    report.per_target_success[k] =
        report.per_target_trials[k] == 0
            ? 0.0
            : static_cast<double>(per_target_hits[k]) / static_cast<double>(report.per_target_trials[k]);
  return report;
}

MultibitReport run_game_multibit(const GameConfig& cfg, std::span<const std::size_t> targets) {
  check_common(cfg);
  const Setup setup = resolve(cfg);
  const std::size_t data_bits = std::size_t{1} << cfg.depth;

  if (targets.empty()) throw std::domain_error("need at least one target");
  std::set<std::size_t> unique(targets.begin(), targets.end());
  if (unique.size() != targets.size())
    throw std::domain_error("multibit targets must be distinct");
  for (std::size_t k : targets)
    if (k >= data_bits) throw std::domain_error("multibit target out of range");

  MultibitReport report;
  report.depth = cfg.depth;
  report.message_bits = static_cast<int>(targets.size());
  report.trials = cfg.trials;
  report.correlation = setup.correlation;
  report.targets.assign(targets.begin(), targets.end());

  std::vector<int> data(data_bits);
  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_key = derive_key(cfg.seed, static_cast<std::uint64_t>(trial));
    CounterRng data_rng(derive_key(trial_key, kDataStream));
    for (auto& bit : data) bit = data_rng.next_bit();

    bool all_correct = true;
    for (std::size_t p_idx = 0; p_idx < targets.size(); ++p_idx) {
      const std::uint64_t pyramid_key =
          derive_key(derive_key(trial_key, kBoxStream), p_idx);
      PyramidStrategy pyramid(setup.behavior, cfg.depth, pyramid_key);
      const int message = pyramid.encode(data);
      const DecodeResult d = pyramid.decode(message, targets[p_idx], cfg.decode_mode);
      all_correct = all_correct && (d.guess == data[targets[p_idx]]);
    }
    hits += all_correct ? 1 : 0;
  }

  report.empirical_success = static_cast<double>(hits) / static_cast<double>(cfg.trials);
  const double per_bit =
      cfg.depth == 0 ? 1.0 : guess_probability(setup.correlation, cfg.depth);
  report.analytic_success = std::pow(per_bit, static_cast<double>(targets.size()));
  const double p = report.analytic_success;
  report.standard_error = std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(cfg.trials));
  return report;
}

}  // namespace nsbox
