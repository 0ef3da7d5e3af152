#include "nsbox/json_reports.hpp"

#include <cstdio>
#include <sstream>

namespace nsbox {

void to_json(nlohmann::json& j, const GameReport& r) {
  j = nlohmann::json{
      {"depth", r.depth},
      {"data_bits", r.data_bits},
      {"correlation", r.correlation},
      {"trials", r.trials},
      {"seed", r.seed},
      {"empirical_success", r.empirical_success},
      {"analytic_success", r.analytic_success},
      {"standard_error", r.standard_error},
      {"per_target_trials", r.per_target_trials},
      {"per_target_success", r.per_target_success},
  };
}

void to_json(nlohmann::json& j, const MultibitReport& r) {
  j = nlohmann::json{
      {"depth", r.depth},
      {"message_bits", r.message_bits},
      {"trials", r.trials},
      {"correlation", r.correlation},
      {"empirical_success", r.empirical_success},
      {"analytic_success", r.analytic_success},
      {"standard_error", r.standard_error},
      {"targets", r.targets},
  };
}

void to_json(nlohmann::json& j, const EntropyReport& r) {
  j = nlohmann::json{
      {"correlation", r.correlation},
      {"depth", r.depth},
      {"guess_probability", r.guess_p},
      {"entropy_bits", r.entropy_bits},
      {"threshold", r.threshold},
      {"margin", r.margin},
      {"violated", r.violated},
  };
}

void to_json(nlohmann::json& j, const DepthBound& r) {
  j = nlohmann::json{
      {"convention",
       r.convention == GapConvention::two_e_squared ? "two_E_squared" : "delta_from_tsirelson"},
      {"gap", r.gap},
      {"threshold", r.threshold},
      {"depth", r.depth},
  };
}

void to_json(nlohmann::json& j, const MutualInfoReport& r) {
  j = nlohmann::json{
      {"data_bits", r.data_bits},
      {"message_budget", r.message_budget},
      {"per_target_mi", r.per_target_mi},
      {"per_target_samples", r.per_target_samples},
      {"total_mi", r.total_mi},
      {"lower_bound", r.lower_bound},
      {"violated", r.violated},
      {"reliable", r.reliable},
  };
}

void to_json(nlohmann::json& j, const RouteCheck& r) {
  j = nlohmann::json{
      {"lhs", r.lhs},
      {"rhs", r.rhs},
      {"margin", r.margin},
      {"satisfied", r.satisfied},
  };
}

void to_json(nlohmann::json& j, const DepthCertificate& r) {
  j = nlohmann::json{
      {"depth", r.depth},
      {"direct", r.direct},
      {"transformed", r.transformed},
      {"series", r.series},
      {"series_partial_sum", r.series_partial_sum},
      {"series_tail_bound", r.series_tail_bound},
  };
}

void to_json(nlohmann::json& j, const TsirelsonCertificate& r) {
  j = nlohmann::json{
      {"depth_max", r.depth_max},
      {"series_terms", r.series_terms},
      {"all_satisfied", r.all_satisfied},
      {"rows", r.rows},
  };
}

namespace {

const char* class_name(BehaviorClass c) {
  switch (c) {
    case BehaviorClass::signaling:
      return "signaling";
    case BehaviorClass::classical:
      return "classical";
    case BehaviorClass::within_tsirelson:
      return "within_tsirelson";
    case BehaviorClass::superquantum:
      return "superquantum";
  }
  return "unknown";
}

}  // namespace

void to_json(nlohmann::json& j, const ClassificationResult& r) {
  j = nlohmann::json{
      {"no_signaling", r.no_signaling},
      {"chsh_values", r.chsh_values},
      {"max_abs_chsh", r.max_abs_chsh},
      {"class", class_name(r.box_class)},
  };
}

void to_json(nlohmann::json& j, const ReproductionRow& r) {
  j = nlohmann::json{
      {"id", r.id},
      {"quantity", r.quantity},
      {"computed", r.computed},
      {"reference", r.reference},
      {"abs_diff", r.abs_diff},
  };
  if (r.computed_log10.has_value()) {
    j["computed_log10_over_301"] = *r.computed_log10;
  }
  if (!r.verdict.empty()) {
    j["verdict"] = r.verdict;
  }
  if (r.correlation.has_value()) {
    j["E"] = *r.correlation;
  }
  if (r.depth.has_value()) {
    j["n"] = *r.depth;
  }
}

std::string transcripts_to_jsonl(const std::vector<RoundTranscript>& transcripts) {
  std::ostringstream out;
  for (const RoundTranscript& t : transcripts) {
    nlohmann::json j;
    j["data"] = t.data;
    j["b"] = t.target;
    j["x"] = t.message;
    j["path_outputs"] = t.path_outputs;
    j["guess"] = t.guess;
    j["correct"] = t.correct;
    out << j.dump() << '\n';
  }
  return out.str();
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string reproduction_to_csv(const std::vector<ReproductionRow>& rows) {
  std::ostringstream out;
  out << "id,quantity,computed,computed_log10_over_301,reference,abs_diff,verdict\n";
  for (const ReproductionRow& r : rows) {
    out << r.id << ",\"" << r.quantity << "\"," << format_double(r.computed) << ',';
    if (r.computed_log10.has_value()) {
      out << format_double(*r.computed_log10);
    }
    out << ',' << format_double(r.reference) << ',' << format_double(r.abs_diff) << ','
        << r.verdict << '\n';
  }
  return out.str();
}

}  // namespace nsbox
