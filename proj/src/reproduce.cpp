#include "nsbox/reproduce.hpp"

#include <cmath>

#include "nsbox/analysis.hpp"
#include "nsbox/polytope.hpp"

namespace nsbox {

namespace {

ReproductionRow entropy_row(std::string id, double correlation, int depth, double reference) {
  const EntropyReport rep = ic_entropy_report(correlation, depth);
  ReproductionRow row;
  row.id = std::move(id);
  row.quantity = "h(guess probability) at depth " + std::to_string(depth);
  row.computed = rep.entropy_bits;
  row.computed_log10 = binary_entropy_log10(rep.guess_p);
  row.reference = reference;
  row.abs_diff = std::abs(row.computed - reference);
  row.verdict = rep.violated ? "violated" : "not violated";
  row.correlation = correlation;
  row.depth = depth;
  return row;
}

ReproductionRow value_row(std::string id, std::string quantity, double computed,
                          double reference) {
  ReproductionRow row;
  row.id = std::move(id);
  row.quantity = std::move(quantity);
  row.computed = computed;
  row.reference = reference;
  row.abs_diff = std::abs(computed - reference);
  return row;
}

}  // namespace

std::vector<ReproductionRow> reproduce_reference_table() {
  std::vector<ReproductionRow> rows;
  const double et = kTsirelsonCorrelation;

  rows.push_back(entropy_row("entropy-quantum-n1", et, 1, 0.600));
  rows.push_back(entropy_row("entropy-quantum-n10", et, 10, 0.99939));
  rows.push_back(entropy_row("entropy-e725-n7", 0.725, 7, 0.99208));
  rows.push_back(entropy_row("entropy-e725-n6", 0.725, 6, 0.9848));
  rows.push_back(entropy_row("entropy-e708-n10", 0.708, 10, 0.99938));

  {
    const DepthBound b = sufficient_violation_depth(0.725, GapConvention::two_e_squared);
    auto row = value_row("depth-bound-e725", "sufficient depth, gap a = 2E^2 - 1",
                         static_cast<double>(b.depth), 8.0);
    row.correlation = 0.725;
    rows.push_back(std::move(row));
  }
  {
    const DepthBound b = sufficient_violation_depth(0.708, GapConvention::delta_from_tsirelson);
    auto row = value_row("depth-bound-e708", "sufficient depth, gap a = E - 1/sqrt(2)",
                         static_cast<double>(b.depth), 432.0);
    row.correlation = 0.708;
    rows.push_back(std::move(row));
  }

  rows.push_back(value_row("classical-optimum", "best local simulation of the correlated box",
                           classical_simulation_optimum().optimum, 0.75));
  rows.push_back(value_row("quantum-optimum", "simulation chance at the quantum bound",
                           0.5 * (1.0 + et), 0.85));

  const auto deterministic = enumerate_deterministic();
  std::size_t ns = 0;
  for (const auto& d : deterministic)
    if (d.no_signaling) ++ns;
  rows.push_back(value_row("deterministic-count", "deterministic tables",
                           static_cast<double>(deterministic.size()), 256.0));
  rows.push_back(value_row("deterministic-no-signaling-count",
                           "deterministic no-signaling tables", static_cast<double>(ns), 16.0));
  rows.push_back(value_row("deterministic-signaling-count", "deterministic signaling tables",
                           static_cast<double>(deterministic.size() - ns), 240.0));
  rows.push_back(value_row("extremal-box-count", "extremal correlated boxes",
                           static_cast<double>(pr_box_variants().size()), 8.0));
  rows.push_back(value_row("polytope-vertex-count", "no-signaling polytope vertices",
                           static_cast<double>(no_signaling_polytope_vertices().size()), 24.0));
  return rows;
}

}  // namespace nsbox
