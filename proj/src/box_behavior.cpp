#include "nsbox/box_behavior.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nsbox {

BoxBehavior BoxBehavior::from_table(const Table& probs, double tol) {
  for (int row = 0; row < 4; ++row) {
    double sum = 0.0;
    for (int col = 0; col < 4; ++col) {
      const double p = probs[row][col];
      if (!(p >= 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "behavior entry out of [0,1] at row " << row << " col " << col << ": " << p;
        throw std::domain_error(msg.str());
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream msg;
      msg << "behavior row " << row << " sums to " << sum << ", off by more than " << tol;
      throw std::domain_error(msg.str());
    }
  }
  BoxBehavior b;
  b.t_ = probs;
  return b;
}

BoxBehavior BoxBehavior::isotropic(double correlation) {
  if (!(correlation >= -1.0 && correlation <= 1.0))
    throw std::domain_error("isotropic correlation must lie in [-1,1]");
  const double win = (1.0 + correlation) / 4.0;
  const double lose = (1.0 - correlation) / 4.0;
  Table t{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob)
          t[input_pair_index(a, b)][output_pair_index(oa, ob)] =
              ((oa ^ ob) == (a & b)) ? win : lose;
  BoxBehavior b;
  b.t_ = t;
  return b;
}

double BoxBehavior::alice_marginal(int a, int out, int b) const noexcept {
  const auto& row = t_[input_pair_index(a, b)];
  return row[output_pair_index(out, 0)] + row[output_pair_index(out, 1)];
}

double BoxBehavior::bob_marginal(int b, int out, int a) const noexcept {
  const auto& row = t_[input_pair_index(a, b)];
  return row[output_pair_index(0, out)] + row[output_pair_index(1, out)];
}

double BoxBehavior::correlator(int a, int b) const noexcept {
  const auto& row = t_[input_pair_index(a, b)];
  return (row[output_pair_index(0, 0)] + row[output_pair_index(1, 1)]) -
         (row[output_pair_index(0, 1)] + row[output_pair_index(1, 0)]);
}

double BoxBehavior::chsh_value() const noexcept {
  return correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
}

bool BoxBehavior::is_no_signaling(double tol) const noexcept {
  for (int x = 0; x < 2; ++x)
    for (int out = 0; out < 2; ++out) {
      if (std::abs(alice_marginal(x, out, 0) - alice_marginal(x, out, 1)) > tol) return false;
      if (std::abs(bob_marginal(x, out, 0) - bob_marginal(x, out, 1)) > tol) return false;
    }
  return true;
}

bool tables_close(const BoxBehavior& x, const BoxBehavior& y, double tol) {
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      if (std::abs(x.table()[row][col] - y.table()[row][col]) > tol) return false;
  return true;
}

}  // namespace nsbox
