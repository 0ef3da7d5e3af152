#include "nsbox/behavior_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace nsbox {

namespace {
const char* const kInputLabels[4] = {"a=0,b=0", "a=0,b=1", "a=1,b=0", "a=1,b=1"};
const char* const kOutputLabels[4] = {"A=0,B=0", "A=0,B=1", "A=1,B=0", "A=1,B=1"};
}  // namespace

BoxBehavior load_behavior(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("behavior file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("probs"))
    throw std::runtime_error("behavior file must be an object with a \"probs\" member");
  const auto& probs = doc["probs"];
  if (!probs.is_array() || probs.size() != 4)
    throw std::runtime_error("\"probs\" must be an array of 4 rows (input pairs 00,01,10,11)");
  BoxBehavior::Table t{};
  for (int row = 0; row < 4; ++row) {
    const auto& r = probs[row];
    if (!r.is_array() || r.size() != 4)
      throw std::runtime_error("each \"probs\" row must hold 4 entries (output pairs 00,01,10,11)");
    for (int col = 0; col < 4; ++col) {
      if (!r[col].is_number())
        throw std::runtime_error("\"probs\" entries must be numbers");
      t[row][col] = r[col].get<double>();
    }
  }
  try {
    return BoxBehavior::from_table(t, kFileTol);
  } catch (const std::domain_error& e) {
    throw std::runtime_error(std::string("behavior file rejected: ") + e.what());
  }
}

BoxBehavior load_behavior_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open behavior file: " + path);
  return load_behavior(in);
}

std::string behavior_to_json(const BoxBehavior& b) {
  nlohmann::json probs = nlohmann::json::array();
  for (int row = 0; row < 4; ++row) {
    nlohmann::json r = nlohmann::json::array();
    for (int col = 0; col < 4; ++col) r.push_back(b.table()[row][col]);
    probs.push_back(std::move(r));
  }
  nlohmann::json doc{
      {"probs", std::move(probs)},
      {"labels",
       {{"rows", "input pair (a,b): 00,01,10,11"},
        {"cols", "output pair (A,B): 00,01,10,11"},
        {"inputs", kInputLabels},
        {"outputs", kOutputLabels}}},
  };
  return doc.dump(2) + "\n";
}

void save_behavior_file(const BoxBehavior& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << behavior_to_json(b);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nsbox
