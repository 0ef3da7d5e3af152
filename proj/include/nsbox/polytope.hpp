#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nsbox/box_behavior.hpp"

namespace nsbox {

// A deterministic pair of local reply functions a -> A(a), b -> B(b).
struct LocalStrategy {
  std::array<int, 2> alice{};  // output for a = 0, 1
  std::array<int, 2> bob{};    // output for b = 0, 1

  BoxBehavior behavior() const;
  // (1/4) sum_ab [A(a) xor B(b) == a.b]: chance of simulating the
  // perfectly correlated box on uniform inputs.
  double simulation_success() const;
};

struct DeterministicBehavior {
  std::array<int, 4> outputs{};  // output pair index per input pair
  BoxBehavior behavior;
  bool no_signaling = false;
  // Set exactly when the table factors as A(a) x B(b); for deterministic
  // tables this coincides with no_signaling.
  std::optional<LocalStrategy> factors;
};

// All 4^4 = 256 deterministic tables, in lexicographic order of `outputs`.
std::vector<DeterministicBehavior> enumerate_deterministic();

// The 8 extremal correlated boxes A xor B = a.b xor (alpha a) xor (beta b)
// xor gamma: the perfectly correlated table and its relabelings.
BoxBehavior extremal_box(int alpha, int beta, int gamma);
std::vector<BoxBehavior> pr_box_variants();

// The 16 local deterministic vertices followed by the 8 extremal boxes:
// every vertex of the no-signaling polytope for two binary inputs/outputs.
std::vector<BoxBehavior> no_signaling_polytope_vertices();

// Input flips and input-conditioned output flips, the symmetry group of the
// classification below. alice_xor[a] is xored onto A when the (already
// flipped) input is a; likewise bob_xor[b].
BoxBehavior relabel(const BoxBehavior& b, bool flip_a, bool flip_b,
                    std::array<int, 2> alice_xor, std::array<int, 2> bob_xor);

enum class BehaviorClass { signaling, classical, within_tsirelson, superquantum };

// Classification slack: strengths within 1e-9 of a boundary stay inside it.
inline constexpr double kClassifySlack = 1e-9;

struct ClassificationResult {
  bool no_signaling = false;
  // One CHSH value per sign pattern (-1)^(a.b + alpha a + beta b + gamma),
  // indexed by (alpha, beta, gamma) as alpha*4 + beta*2 + gamma; entry 0 is
  // the plain <00>+<01>+<10>-<11>.
  std::array<double, 8> chsh_values{};
  double max_abs_chsh = 0;
  BehaviorClass box_class = BehaviorClass::signaling;
};

// Classifies by the largest |K| over the 8 relabeled CHSH sums. Signaling
// tables are labelled signaling with the CHSH values still reported.
//   classical:        no-signaling and max |K| <= 2 (these bounds, with
//                     positivity, exactly cut out the local set)
//   within_tsirelson: max |K| <= 2 sqrt(2); necessary but not sufficient
//                     for a quantum realization
//   superquantum:     any other no-signaling table
ClassificationResult classify(const BoxBehavior& b);

struct SimulationOptimum {
  double optimum = 0;                    // 3/4
  std::vector<LocalStrategy> achievers;  // strategies attaining it
};

// Brute force over the 16 deterministic local strategies. Shared classical
// randomness cannot beat the best pure strategy, so this is the classical
// optimum for simulating the perfectly correlated box.
SimulationOptimum classical_simulation_optimum();

}  // namespace nsbox
