#include "nsbox/tasks.hpp"

#include <stdexcept>

namespace nsbox {

TransferResult oblivious_transfer(int secret0, int secret1, int choice, BoxInstance& box) {
  if ((secret0 | secret1 | choice) & ~1)
    throw std::invalid_argument("secrets and choice must be bits");
  const int a_out = box.submit(Party::alice, secret0 ^ secret1);
  TransferResult r;
  r.message = secret0 ^ a_out;
  const int b_out = box.submit(Party::bob, choice);
  r.received = r.message ^ b_out;
  return r;
}

DateResult dating_game(int alice_likes, int bob_likes, BoxInstance& box) {
  if ((alice_likes | bob_likes) & ~1)
    throw std::invalid_argument("interest flags must be bits");
  DateResult r;
  r.exact = tables_close(box.behavior(), BoxBehavior::pr_box(), kStructuralTol);
  r.alice_output = box.submit(Party::alice, alice_likes);
  r.bob_output = box.submit(Party::bob, bob_likes);
  r.date = r.alice_output != r.bob_output;
  return r;
}

}  // namespace nsbox
