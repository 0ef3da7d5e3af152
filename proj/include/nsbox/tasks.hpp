#pragma once

#include "nsbox/box_instance.hpp"

namespace nsbox {

struct TransferResult {
  int message = 0;   // x announced by the sender
  int received = 0;  // receiver's reconstruction of the chosen secret
};

// 1-out-of-2 transfer over a single box: the sender inputs s0 xor s1 and
// announces x = s0 xor A; the receiver inputs the choice bit and computes
// x xor B. The sender side runs first, so x exists before the choice is
// made and its distribution carries no information about the choice. With
// a perfectly correlated box the received bit equals the chosen secret.
// Secrets and choice must be 0/1 (std::invalid_argument); the box must be
// fresh (std::logic_error surfaces from the instance otherwise).
TransferResult oblivious_transfer(int secret0, int secret1, int choice, BoxInstance& box);

struct DateResult {
  int alice_output = 0;
  int bob_output = 0;
  bool date = false;  // outputs differ
  bool exact = false; // behavior is the perfectly correlated table, so
                      // date == (alice_likes AND bob_likes) with certainty
};

// Both parties feed their interest bit into the box and publicly compare
// outputs; they meet exactly when the outputs differ. On the perfectly
// correlated box that equals the AND of the two bits, while a party who
// declined learns nothing about the other's bit. For any other behavior
// the comparison is only statistically aligned with the AND, and the
// result says so via .exact.
DateResult dating_game(int alice_likes, int bob_likes, BoxInstance& box);

}  // namespace nsbox
