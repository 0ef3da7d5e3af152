#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "nsbox/analysis.hpp"
#include "nsbox/game.hpp"
#include "nsbox/mutual_info.hpp"
#include "nsbox/polytope.hpp"
#include "nsbox/reproduce.hpp"
#include "nsbox/tsirelson_check.hpp"

namespace nsbox {

void to_json(nlohmann::json& j, const GameReport& r);
void to_json(nlohmann::json& j, const MultibitReport& r);
void to_json(nlohmann::json& j, const EntropyReport& r);
void to_json(nlohmann::json& j, const DepthBound& r);
void to_json(nlohmann::json& j, const MutualInfoReport& r);
void to_json(nlohmann::json& j, const RouteCheck& r);
void to_json(nlohmann::json& j, const DepthCertificate& r);
void to_json(nlohmann::json& j, const TsirelsonCertificate& r);
void to_json(nlohmann::json& j, const ClassificationResult& r);
void to_json(nlohmann::json& j, const ReproductionRow& r);

// One JSON object per line, suitable for streaming consumers.
std::string transcripts_to_jsonl(const std::vector<RoundTranscript>& transcripts);

std::string reproduction_to_csv(const std::vector<ReproductionRow>& rows);

}  // namespace nsbox
