#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nsbox {

// One line of the reference reproduction table: a computed quantity next to
// the published value it should match. Entropy references were originally
// hand-computed with 3-digit base-10 log tables, so those rows also carry a
// value in that convention; abs_diff always compares the exact-double column.
// Differences are reported here, never asserted; tolerances live in the test
// suite.
struct ReproductionRow {
  std::string id;
  std::string quantity;
  double computed = 0;                    // exact double evaluation
  std::optional<double> computed_log10;   // 3-digit-log-table convention
  double reference = 0;                   // published value
  double abs_diff = 0;                    // |computed - reference|
  std::string verdict;                    // "violated" / "not violated" / ""
  std::optional<double> correlation;
  std::optional<int> depth;
};

std::vector<ReproductionRow> reproduce_reference_table();

}  // namespace nsbox
