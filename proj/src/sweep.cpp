#include "nsbox/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "nsbox/analysis.hpp"
#include "nsbox/rng.hpp"

namespace nsbox {

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  rows.reserve(config.cells.size());
  for (std::size_t i = 0; i < config.cells.size(); ++i) {
    const SweepCell& cell = config.cells[i];
    GameConfig game;
    game.depth = cell.depth;
    game.correlation = cell.correlation;
    game.trials = cell.trials;
    game.seed = derive_key(config.seed, i);
    game.message_bits = cell.message_bits;
    game.decode_mode = config.decode_mode;

    SweepRow row;
    row.cell = cell;
    if (cell.message_bits > 1) {
      std::vector<std::size_t> targets(static_cast<std::size_t>(cell.message_bits));
      std::iota(targets.begin(), targets.end(), std::size_t{0});
      MultibitReport report = run_game_multibit(game, targets);
      row.empirical_success = report.empirical_success;
      row.analytic_success = report.analytic_success;
      row.standard_error = report.standard_error;
    } else {
      GameReport report = run_game(game);
      row.empirical_success = report.empirical_success;
      row.analytic_success = report.analytic_success;
      row.standard_error = report.standard_error;
    }
    if (cell.depth >= 1) {
      EntropyReport e = ic_entropy_report(cell.correlation, cell.depth);
      row.entropy_bits = e.entropy_bits;
      row.threshold = e.threshold;
      row.violated = e.violated;
    } else {
      row.entropy_bits = 0;
      row.threshold = 0;
      row.violated = false;
    }
    rows.push_back(row);
  }
  return rows;
}

SweepConfig load_sweep_config(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("sweep config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw std::runtime_error("sweep config: expected an object with a \"cells\" array");
  }
  SweepConfig config;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw std::runtime_error("sweep config: \"seed\" must be an integer");
    }
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  for (const auto& entry : doc["cells"]) {
    if (!entry.is_object()) {
      throw std::runtime_error("sweep config: each cell must be an object");
    }
    SweepCell cell;
    if (!entry.contains("E") || !entry["E"].is_number()) {
      throw std::runtime_error("sweep config: cell missing numeric \"E\"");
    }
    cell.correlation = entry["E"].get<double>();
    if (!entry.contains("n") || !entry["n"].is_number_integer()) {
      throw std::runtime_error("sweep config: cell missing integer \"n\"");
    }
    cell.depth = entry["n"].get<int>();
    if (entry.contains("trials")) {
      cell.trials = entry["trials"].get<std::int64_t>();
    }
    if (entry.contains("m")) {
      cell.message_bits = entry["m"].get<int>();
    }
    config.cells.push_back(cell);
  }
  return config;
}

SweepConfig load_sweep_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("sweep config: cannot open " + path);
  }
  return load_sweep_config(in);
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  nlohmann::json doc;
  doc["seed"] = config.seed;
  doc["rows"] = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json r;
    r["E"] = row.cell.correlation;
    r["n"] = row.cell.depth;
    r["trials"] = row.cell.trials;
    r["m"] = row.cell.message_bits;
    r["empirical_success"] = row.empirical_success;
    r["analytic_success"] = row.analytic_success;
    r["standard_error"] = row.standard_error;
    r["entropy_bits"] = row.entropy_bits;
    r["threshold"] = row.threshold;
    r["violated"] = row.violated;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "E,n,trials,m,empirical_success,analytic_success,standard_error,"
         "entropy_bits,threshold,violated\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.cell.correlation) << ',' << row.cell.depth << ','
        << row.cell.trials << ',' << row.cell.message_bits << ','
        << format_double(row.empirical_success) << ','
        << format_double(row.analytic_success) << ','
        << format_double(row.standard_error) << ','
        << format_double(row.entropy_bits) << ','
        << format_double(row.threshold) << ','
        << (row.violated ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace nsbox
