#pragma once

#include <iosfwd>
#include <string>

#include "nsbox/box_behavior.hpp"

namespace nsbox {

// Behavior files are JSON:
//
//   {"probs": [[p,p,p,p],[...],[...],[...]], "labels": {...}}
//
// "probs" rows are input pairs (a,b) in order 00,01,10,11 and columns output
// pairs (A,B) in the same order. "labels" is optional and purely descriptive.
// Entries are parsed as decimal doubles exactly as written; rows whose sums
// are off from 1 by more than kFileTol, negative entries, and malformed
// shapes are rejected with std::runtime_error.
BoxBehavior load_behavior(std::istream& in);
BoxBehavior load_behavior_file(const std::string& path);

std::string behavior_to_json(const BoxBehavior& b);
void save_behavior_file(const BoxBehavior& b, const std::string& path);

}  // namespace nsbox
