#pragma once

#include <array>

namespace nsbox {

// Tolerance for structural checks on internally constructed tables.
inline constexpr double kStructuralTol = 1e-12;
// Looser gate for tables read from files, which may carry rounded decimals.
inline constexpr double kFileTol = 1e-9;

inline constexpr int input_pair_index(int a, int b) noexcept { return a * 2 + b; }
inline constexpr int output_pair_index(int out_a, int out_b) noexcept { return out_a * 2 + out_b; }

// Joint conditional distribution p(A,B | a,b) of a two-party binary box.
// Rows are input pairs (a,b) in order 00,01,10,11; columns are output pairs
// (A,B) in the same order. Rows are probability vectors.
class BoxBehavior {
 public:
  using Table = std::array<std::array<double, 4>, 4>;

  // Validates entries in [0,1] and row sums within tol of 1; throws
  // std::domain_error otherwise.
  static BoxBehavior from_table(const Table& probs, double tol = kStructuralTol);

  // Correlated family: A xor B = a.b holds with probability (1+E)/2 on
  // every input pair and both one-sided marginals are uniform. E = 1 is the
  // perfectly correlated box, E = 0 is white noise. E outside [-1,1] throws
  // std::domain_error.
  static BoxBehavior isotropic(double correlation);

  static BoxBehavior pr_box() { return isotropic(1.0); }
  static BoxBehavior uniform_noise() { return isotropic(0.0); }

  double prob(int a, int b, int out_a, int out_b) const noexcept {
    return t_[input_pair_index(a, b)][output_pair_index(out_a, out_b)];
  }
  const Table& table() const noexcept { return t_; }

  // p(A = out | a), evaluated by summing the column for the given b. For a
  // no-signaling behavior the choice of b is immaterial.
  double alice_marginal(int a, int out, int b) const noexcept;
  double bob_marginal(int b, int out, int a) const noexcept;

  // <ab> = p(A == B | a,b) - p(A != B | a,b), the +-1-output correlator.
  double correlator(int a, int b) const noexcept;

  // K = <00> + <01> + <10> - <11>. The isotropic family has K = 4E; local
  // behaviors satisfy |K| <= 2 and quantum ones |K| <= 2 sqrt(2).
  double chsh_value() const noexcept;

  // Both one-sided marginals are independent of the other party's input,
  // each checked entrywise within tol.
  bool is_no_signaling(double tol = kStructuralTol) const noexcept;

  bool operator==(const BoxBehavior&) const = default;

 private:
  BoxBehavior() = default;
  Table t_{};
};

// Entrywise comparison within tol.
bool tables_close(const BoxBehavior& x, const BoxBehavior& y, double tol);

}  // namespace nsbox
