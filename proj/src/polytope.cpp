#include "nsbox/polytope.hpp"

#include <algorithm>
#include <cmath>

namespace nsbox {

namespace {

BoxBehavior deterministic_table(const std::array<int, 4>& outputs) {
  BoxBehavior::Table t{};
  for (int row = 0; row < 4; ++row) t[row][outputs[row]] = 1.0;
  return BoxBehavior::from_table(t);
}

}  // namespace

BoxBehavior LocalStrategy::behavior() const {
  std::array<int, 4> outputs{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      outputs[input_pair_index(a, b)] = output_pair_index(alice[a], bob[b]);
  return deterministic_table(outputs);
}

double LocalStrategy::simulation_success() const {
  int wins = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if ((alice[a] ^ bob[b]) == (a & b)) ++wins;
  return wins / 4.0;
}

std::vector<DeterministicBehavior> enumerate_deterministic() {
  std::vector<DeterministicBehavior> all;
  all.reserve(256);
  for (int o0 = 0; o0 < 4; ++o0)
    for (int o1 = 0; o1 < 4; ++o1)
      for (int o2 = 0; o2 < 4; ++o2)
        for (int o3 = 0; o3 < 4; ++o3) {
          const std::array<int, 4> outputs{o0, o1, o2, o3};
          DeterministicBehavior d{outputs, deterministic_table(outputs), false, {}};
          d.no_signaling = d.behavior.is_no_signaling(kStructuralTol);
          // The table factors iff the A half depends only on a and the B
          // half only on b.
          const auto out_a = [&](int pair) { return d.outputs[pair] >> 1; };
          const auto out_b = [&](int pair) { return d.outputs[pair] & 1; };
          if (out_a(0) == out_a(1) && out_a(2) == out_a(3) &&
              out_b(0) == out_b(2) && out_b(1) == out_b(3)) {
            LocalStrategy s;
            s.alice = {out_a(0), out_a(2)};
            s.bob = {out_b(0), out_b(1)};
            d.factors = s;
          }
          all.push_back(std::move(d));
        }
  return all;
}

BoxBehavior extremal_box(int alpha, int beta, int gamma) {
  BoxBehavior::Table t{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int parity = (a & b) ^ (alpha & a) ^ (beta & b) ^ gamma;
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob)
          t[input_pair_index(a, b)][output_pair_index(oa, ob)] =
              ((oa ^ ob) == parity) ? 0.5 : 0.0;
    }
  return BoxBehavior::from_table(t);
}

std::vector<BoxBehavior> pr_box_variants() {
  std::vector<BoxBehavior> variants;
  variants.reserve(8);
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma)
        variants.push_back(extremal_box(alpha, beta, gamma));
  return variants;
}

std::vector<BoxBehavior> no_signaling_polytope_vertices() {
  std::vector<BoxBehavior> vertices;
  vertices.reserve(24);
  for (const auto& d : enumerate_deterministic())
    if (d.no_signaling) vertices.push_back(d.behavior);
  for (const auto& v : pr_box_variants()) vertices.push_back(v);
  return vertices;
}

BoxBehavior relabel(const BoxBehavior& b, bool flip_a, bool flip_b,
                    std::array<int, 2> alice_xor, std::array<int, 2> bob_xor) {
  BoxBehavior::Table t{};
  for (int a = 0; a < 2; ++a)
    for (int in_b = 0; in_b < 2; ++in_b)
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob) {
          const int src_a = a ^ (flip_a ? 1 : 0);
          const int src_b = in_b ^ (flip_b ? 1 : 0);
          t[input_pair_index(a, in_b)][output_pair_index(oa, ob)] =
              b.prob(src_a, src_b, oa ^ alice_xor[a], ob ^ bob_xor[in_b]);
        }
  return BoxBehavior::from_table(t, kFileTol);
}

ClassificationResult classify(const BoxBehavior& b) {
  ClassificationResult r;
  r.no_signaling = b.is_no_signaling(kFileTol);
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma) {
        double k = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int in_b = 0; in_b < 2; ++in_b) {
            const int parity = (a & in_b) ^ (alpha & a) ^ (beta & in_b) ^ gamma;
            k += (parity ? -1.0 : 1.0) * b.correlator(a, in_b);
          }
        r.chsh_values[alpha * 4 + beta * 2 + gamma] = k;
        r.max_abs_chsh = std::max(r.max_abs_chsh, std::abs(k));
      }
  if (!r.no_signaling) {
    r.box_class = BehaviorClass::signaling;
  } else if (r.max_abs_chsh <= 2.0 + kClassifySlack) {
    r.box_class = BehaviorClass::classical;
  } else if (r.max_abs_chsh <= 2.0 * std::sqrt(2.0) + kClassifySlack) {
    r.box_class = BehaviorClass::within_tsirelson;
  } else {
    r.box_class = BehaviorClass::superquantum;
  }
  return r;
}

SimulationOptimum classical_simulation_optimum() {
  SimulationOptimum best;
  std::vector<std::pair<LocalStrategy, double>> scored;
  for (int a0 = 0; a0 < 2; ++a0)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1) {
          LocalStrategy s{{a0, a1}, {b0, b1}};
          scored.emplace_back(s, s.simulation_success());
        }
  for (const auto& [s, value] : scored) best.optimum = std::max(best.optimum, value);
  for (const auto& [s, value] : scored)
    if (value == best.optimum) best.achievers.push_back(s);
  return best;
}

}  // namespace nsbox
