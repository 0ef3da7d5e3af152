// nsbox: no-signaling box toolkit.
//
// Subcommands: game, analyze, appendix, polytope, reproduce, sweep. Every
// subcommand emits a machine-readable report (JSON by default, CSV where the
// data is tabular) to stdout or to --out. Numbers are emitted in full double
// precision; JSON reports additionally carry a "display" object with headline
// quantities rounded for reading.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsbox/analysis.hpp"
#include "nsbox/behavior_io.hpp"
#include "nsbox/box_behavior.hpp"
#include "nsbox/game.hpp"
#include "nsbox/json_reports.hpp"
#include "nsbox/polytope.hpp"
#include "nsbox/reproduce.hpp"
#include "nsbox/sweep.hpp"
#include "nsbox/tsirelson_check.hpp"

namespace {

using nsbox::BoxBehavior;

std::string rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5g", v);
  return buf;
}

std::string full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Writes to the path when given, stdout otherwise. Unwritable paths are an
// I/O error with nonzero exit.
int emit_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 1;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return 1;
  }
  return 0;
}

struct GlobalOptions {
  std::uint64_t seed = 0x5EED;
  std::string emit = "json";
  std::string out_path;
};

int run_game_command(const GlobalOptions& global, int depth, double correlation,
                     const std::string& behavior_path, std::int64_t trials, int message_bits,
                     const std::string& decode_mode, const std::string& transcripts_path) {
  nsbox::GameConfig cfg;
  cfg.depth = depth;
  cfg.correlation = correlation;
  cfg.trials = trials;
  cfg.seed = global.seed;
  cfg.message_bits = message_bits;
  cfg.decode_mode =
      decode_mode == "all-levels" ? nsbox::DecodeMode::all_levels : nsbox::DecodeMode::path_only;
  if (!behavior_path.empty()) {
    cfg.behavior = nsbox::load_behavior_file(behavior_path);
  }

  nlohmann::json doc;
  std::string csv;
  if (message_bits > 1) {
    std::vector<std::size_t> targets(static_cast<std::size_t>(message_bits));
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    nsbox::MultibitReport report = nsbox::run_game_multibit(cfg, targets);
    doc = report;
    doc["display"] = {{"empirical_success", rounded(report.empirical_success)},
                      {"analytic_success", rounded(report.analytic_success)}};
    std::ostringstream s;
    s << "depth,message_bits,trials,correlation,empirical_success,analytic_success,"
         "standard_error\n"
      << report.depth << ',' << report.message_bits << ',' << report.trials << ','
      << full(report.correlation) << ',' << full(report.empirical_success) << ','
      << full(report.analytic_success) << ',' << full(report.standard_error) << '\n';
    csv = s.str();
  } else {
    std::vector<nsbox::RoundTranscript> transcripts;
    std::vector<nsbox::RoundTranscript>* sink =
        transcripts_path.empty() ? nullptr : &transcripts;
    nsbox::GameReport report = nsbox::run_game(cfg, sink);
    doc = report;
    doc["display"] = {{"empirical_success", rounded(report.empirical_success)},
                      {"analytic_success", rounded(report.analytic_success)}};
    std::ostringstream s;
    s << "depth,data_bits,trials,correlation,empirical_success,analytic_success,"
         "standard_error\n"
      << report.depth << ',' << report.data_bits << ',' << report.trials << ','
      << full(report.correlation) << ',' << full(report.empirical_success) << ','
      << full(report.analytic_success) << ',' << full(report.standard_error) << '\n';
    csv = s.str();
    if (sink != nullptr) {
      int rc = emit_text(transcripts_path, nsbox::transcripts_to_jsonl(transcripts));
      if (rc != 0) return rc;
    }
  }
  if (global.emit == "csv") return emit_text(global.out_path, csv);
  return emit_text(global.out_path, doc.dump(2) + "\n");
}

int run_analyze_command(const GlobalOptions& global, std::optional<double> correlation,
                        std::optional<int> depth, std::optional<int> scan_depth_max,
                        const std::string& convention_name) {
  if (!correlation.has_value()) {
    std::cerr << "error: analyze requires --E\n";
    return 1;
  }
  if (!depth.has_value() && !scan_depth_max.has_value() && convention_name.empty()) {
    std::cerr << "error: analyze requires at least one of --n, --scan-n-max, --a-convention\n";
    return 1;
  }

  nlohmann::json doc;
  doc["E"] = *correlation;
  std::ostringstream csv;
  csv << "kind,E,n,guess_probability,entropy_bits,threshold,margin,violated,"
         "convention,gap,bound_threshold,bound_depth\n";

  if (depth.has_value()) {
    nsbox::EntropyReport report = nsbox::ic_entropy_report(*correlation, *depth);
    doc["report"] = report;
    doc["display"] = {{"entropy_bits", rounded(report.entropy_bits)},
                      {"threshold", rounded(report.threshold)}};
    csv << "entropy," << full(*correlation) << ',' << *depth << ',' << full(report.guess_p)
        << ',' << full(report.entropy_bits) << ',' << full(report.threshold) << ','
        << full(report.margin) << ',' << (report.violated ? "true" : "false") << ",,,,\n";
  }
  if (scan_depth_max.has_value()) {
    std::optional<int> found = nsbox::min_violating_depth(*correlation, *scan_depth_max);
    doc["scan"] = {{"n_max", *scan_depth_max}};
    if (found.has_value()) {
      doc["scan"]["min_violating_n"] = *found;
      csv << "scan," << full(*correlation) << ',' << *found << ",,,,,true,,,,\n";
    } else {
      doc["scan"]["min_violating_n"] = nullptr;
      csv << "scan," << full(*correlation) << ",,,,,,false,,,,\n";
    }
  }
  if (!convention_name.empty()) {
    nsbox::GapConvention convention = convention_name == "delta_from_tsirelson"
                                          ? nsbox::GapConvention::delta_from_tsirelson
                                          : nsbox::GapConvention::two_e_squared;
    nsbox::DepthBound bound = nsbox::sufficient_violation_depth(*correlation, convention);
    doc["bound"] = bound;
    csv << "bound," << full(*correlation) << ",,,,,,," << convention_name << ','
        << full(bound.gap) << ',' << full(bound.threshold) << ',' << bound.depth << '\n';
  }

  if (global.emit == "csv") return emit_text(global.out_path, csv.str());
  return emit_text(global.out_path, doc.dump(2) + "\n");
}

int run_appendix_command(const GlobalOptions& global, int depth_max) {
  nsbox::TsirelsonCertificate cert = nsbox::verify_tsirelson_point(depth_max);
  if (global.emit == "csv") {
    std::ostringstream s;
    s << "n,direct_lhs,direct_rhs,direct_margin,transformed_lhs,transformed_rhs,"
         "transformed_margin,series_lhs,series_rhs,series_margin,series_partial_sum,"
         "series_tail_bound\n";
    for (const nsbox::DepthCertificate& row : cert.rows) {
      s << row.depth << ',' << full(row.direct.lhs) << ',' << full(row.direct.rhs) << ','
        << full(row.direct.margin) << ',' << full(row.transformed.lhs) << ','
        << full(row.transformed.rhs) << ',' << full(row.transformed.margin) << ','
        << full(row.series.lhs) << ',' << full(row.series.rhs) << ','
        << full(row.series.margin) << ',' << full(row.series_partial_sum) << ','
        << full(row.series_tail_bound) << '\n';
    }
    return emit_text(global.out_path, s.str());
  }
  nlohmann::json doc = cert;
  doc["display"] = {{"all_satisfied", cert.all_satisfied ? "true" : "false"},
                    {"depth_max", std::to_string(cert.depth_max)}};
  return emit_text(global.out_path, doc.dump(2) + "\n");
}

int run_polytope_command(const GlobalOptions& global, bool enumerate_flag,
                         const std::string& classify_path, bool classical_optimum_flag) {
  const int requested = static_cast<int>(enumerate_flag) +
                        static_cast<int>(!classify_path.empty()) +
                        static_cast<int>(classical_optimum_flag);
  if (requested != 1) {
    std::cerr << "error: polytope requires exactly one of --enumerate, --classify, "
                 "--classical-optimum\n";
    return 1;
  }

  if (enumerate_flag) {
    const auto deterministic = nsbox::enumerate_deterministic();
    const auto vertices = nsbox::no_signaling_polytope_vertices();
    std::size_t ns_count = 0;
    for (const auto& d : deterministic)
      if (d.no_signaling) ++ns_count;
    if (global.emit == "csv") {
      std::ostringstream s;
      s << "index,output_00,output_01,output_10,output_11,no_signaling,local_product\n";
      for (std::size_t i = 0; i < deterministic.size(); ++i) {
        const auto& d = deterministic[i];
        s << i;
        for (int pair = 0; pair < 4; ++pair) s << ',' << d.outputs[pair];
        s << ',' << (d.no_signaling ? "true" : "false") << ','
          << (d.factors.has_value() ? "true" : "false") << '\n';
      }
      return emit_text(global.out_path, s.str());
    }
    nlohmann::json doc;
    doc["deterministic_count"] = deterministic.size();
    doc["no_signaling_count"] = ns_count;
    doc["signaling_count"] = deterministic.size() - ns_count;
    doc["extremal_box_count"] = nsbox::pr_box_variants().size();
    doc["vertex_count"] = vertices.size();
    doc["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      nlohmann::json v;
      v["index"] = i;
      v["kind"] = i < 16 ? "local" : "extremal";
      v["probs"] = vertices[i].table();
      doc["vertices"].push_back(std::move(v));
    }
    doc["display"] = {{"counts", "256 deterministic / 16 no-signaling / 240 signaling / "
                                 "8 extremal / 24 vertices"}};
    return emit_text(global.out_path, doc.dump(2) + "\n");
  }

  if (!classify_path.empty()) {
    BoxBehavior behavior = nsbox::load_behavior_file(classify_path);
    nsbox::ClassificationResult result = nsbox::classify(behavior);
    if (global.emit == "csv") {
      std::ostringstream s;
      s << "no_signaling,K_000,K_001,K_010,K_011,K_100,K_101,K_110,K_111,max_abs_chsh,class\n";
      s << (result.no_signaling ? "true" : "false");
      for (double k : result.chsh_values) s << ',' << full(k);
      nlohmann::json tmp = result;
      s << ',' << full(result.max_abs_chsh) << ',' << tmp["class"].get<std::string>() << '\n';
      return emit_text(global.out_path, s.str());
    }
    nlohmann::json doc = result;
    doc["display"] = {{"max_abs_chsh", rounded(result.max_abs_chsh)},
                      {"class", doc["class"]}};
    return emit_text(global.out_path, doc.dump(2) + "\n");
  }

  nsbox::SimulationOptimum opt = nsbox::classical_simulation_optimum();
  if (global.emit == "csv") {
    std::ostringstream s;
    s << "optimum,achiever_count\n"
      << full(opt.optimum) << ',' << opt.achievers.size() << '\n';
    return emit_text(global.out_path, s.str());
  }
  nlohmann::json doc;
  doc["optimum"] = opt.optimum;
  doc["achievers"] = nlohmann::json::array();
  for (const nsbox::LocalStrategy& strategy : opt.achievers) {
    doc["achievers"].push_back(nlohmann::json{{"alice", strategy.alice},
                                              {"bob", strategy.bob},
                                              {"success", strategy.simulation_success()}});
  }
  doc["display"] = {{"optimum", rounded(opt.optimum)}};
  return emit_text(global.out_path, doc.dump(2) + "\n");
}

int run_reproduce_command(const GlobalOptions& global) {
  const std::vector<nsbox::ReproductionRow> rows = nsbox::reproduce_reference_table();
  if (global.emit == "csv") {
    return emit_text(global.out_path, nsbox::reproduction_to_csv(rows));
  }
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const nsbox::ReproductionRow& row : rows) {
    nlohmann::json r = row;
    r["display"] = rounded(row.computed);
    doc["rows"].push_back(std::move(r));
  }
  return emit_text(global.out_path, doc.dump(2) + "\n");
}

int run_sweep_command(const GlobalOptions& global, const std::string& config_path,
                      bool seed_given) {
  nsbox::SweepConfig config = nsbox::load_sweep_config_file(config_path);
  if (seed_given) config.seed = global.seed;
  const std::vector<nsbox::SweepRow> rows = nsbox::run_sweep(config);
  if (global.emit == "csv") {
    return emit_text(global.out_path, nsbox::sweep_to_csv(rows));
  }
  return emit_text(global.out_path, nsbox::sweep_to_json(config, rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"no-signaling box toolkit"};
  app.require_subcommand(1);
  // Global flags (--seed, --emit, --out) are accepted after the subcommand
  // name as well; fallthrough() routes unmatched subcommand options here.
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed (64-bit)")->capture_default_str();
  app.add_option("--emit", global.emit, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", global.out_path, "write the report to this path instead of stdout");

  int depth = 1;
  double correlation = 1.0;
  std::string behavior_path;
  std::int64_t trials = 100000;
  int message_bits = 1;
  std::string decode_mode = "path";
  std::string transcripts_path;
  CLI::App* game = app.add_subcommand("game", "play the guessing game over a box pyramid");
  game->add_option("--n", depth, "pyramid depth (N = 2^n data bits)")->capture_default_str();
  CLI::Option* e_opt =
      game->add_option("--E", correlation, "isotropic correlation in [-1,1]")
          ->capture_default_str();
  game->add_option("--behavior", behavior_path, "behavior table JSON file")->excludes(e_opt);
  game->add_option("--trials", trials, "Monte Carlo rounds")->capture_default_str();
  game->add_option("--m", message_bits, "message bits (independent pyramids)")
      ->capture_default_str();
  game->add_option("--decode-mode", decode_mode, "Bob submits to path boxes only, or all")
      ->check(CLI::IsMember({"path", "all-levels"}));
  game->add_option("--transcripts", transcripts_path,
                   "also write one JSON line per round to this path");

  std::optional<double> analyze_correlation;
  std::optional<int> analyze_depth;
  std::optional<int> scan_depth_max;
  std::string convention_name;
  CLI::App* analyze =
      app.add_subcommand("analyze", "entropy reports, violation scans, depth bounds");
  analyze->add_option("--E", analyze_correlation, "correlation to analyze");
  analyze->add_option("--n", analyze_depth, "depth for the entropy report");
  analyze->add_option("--scan-n-max", scan_depth_max, "scan depths 1..max for a violation");
  analyze->add_option("--a-convention", convention_name,
                      "gap convention for the sufficient depth bound")
      ->check(CLI::IsMember({"two_E_squared", "delta_from_tsirelson"}));

  int appendix_depth_max = 64;
  CLI::App* appendix =
      app.add_subcommand("appendix", "three-route certificate at the Tsirelson point");
  appendix->add_option("--n-max", appendix_depth_max, "verify depths 1..max")
      ->capture_default_str();

  bool enumerate_flag = false;
  std::string classify_path;
  bool classical_optimum_flag = false;
  CLI::App* polytope = app.add_subcommand("polytope", "enumerate and classify behaviors");
  polytope->add_flag("--enumerate", enumerate_flag, "list deterministic tables and vertices");
  polytope->add_option("--classify", classify_path, "classify the behavior in this JSON file");
  polytope->add_flag("--classical-optimum", classical_optimum_flag,
                     "brute-force the best local simulation");

  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute the reference value table");

  std::string sweep_config_path;
  CLI::App* sweep = app.add_subcommand("sweep", "run a grid of game cells from a config file");
  sweep->add_option("--config", sweep_config_path, "sweep config JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (game->parsed()) {
      return run_game_command(global, depth, correlation, behavior_path, trials, message_bits,
                              decode_mode, transcripts_path);
    }
    if (analyze->parsed()) {
      return run_analyze_command(global, analyze_correlation, analyze_depth, scan_depth_max,
                                 convention_name);
    }
    if (appendix->parsed()) {
      return run_appendix_command(global, appendix_depth_max);
    }
    if (polytope->parsed()) {
      return run_polytope_command(global, enumerate_flag, classify_path,
                                  classical_optimum_flag);
    }
    if (reproduce->parsed()) {
      return run_reproduce_command(global);
    }
    if (sweep->parsed()) {
      return run_sweep_command(global, sweep_config_path,
                               app.count("--seed") > 0);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
