#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsbox/game.hpp"

namespace nsbox {

struct SweepCell {
  double correlation = 1.0;
  int depth = 1;
  std::int64_t trials = 10000;
  int message_bits = 1;
};

struct SweepConfig {
  std::vector<SweepCell> cells;
  std::uint64_t seed = 0x5EED;
  DecodeMode decode_mode = DecodeMode::path_only;
};

struct SweepRow {
  SweepCell cell;
  double empirical_success = 0;
  double analytic_success = 0;
  double standard_error = 0;
  double entropy_bits = 0;  // h at the cell's analytic guess chance
  double threshold = 0;     // 1 - 2^-depth
  bool violated = false;
};

// Cell i runs under derive_key(seed, i); a rerun with the same config is
// byte-identical once serialized. Cells with message_bits > 1 play the
// multibit game against targets {0, .., m-1}.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Config files are JSON:
//   {"seed": 7, "cells": [{"E": 0.9, "n": 2, "trials": 10000, "m": 1}, ...]}
// "m" defaults to 1 and "seed" to 0x5EED.
SweepConfig load_sweep_config(std::istream& in);
SweepConfig load_sweep_config_file(const std::string& path);

std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace nsbox
