#include "nsbox/box_instance.hpp"

#include <stdexcept>

namespace nsbox {

BoxInstance::BoxInstance(const BoxBehavior& behavior, std::uint64_t rng_key)
    : behavior_(behavior), rng_(rng_key) {
  if (!behavior_.is_no_signaling(kFileTol))
    throw std::domain_error("box instances require a no-signaling behavior");
}

InstanceState BoxInstance::state() const noexcept {
  const bool a = in_[0].has_value(), b = in_[1].has_value();
  if (a && b) return InstanceState::consumed;
  if (a) return InstanceState::alice_used;
  if (b) return InstanceState::bob_used;
  return InstanceState::fresh;
}

int BoxInstance::submit(Party party, int input) {
  if (input != 0 && input != 1) throw std::invalid_argument("box input must be 0 or 1");
  const int self = idx(party);
  const int other = 1 - self;
  if (in_[self].has_value()) {
    throw std::logic_error(state() == InstanceState::consumed
                               ? "box instance already consumed"
                               : "party already submitted to this box");
  }

  int out;
  if (!in_[other].has_value()) {
    // First arrival: draw from this party's marginal. Any value works for
    // the other input below; no-signaling was checked at construction.
    const double p0 = (party == Party::alice) ? behavior_.alice_marginal(input, 0, 0)
                                              : behavior_.bob_marginal(input, 0, 0);
    out = rng_.next_bernoulli(p0) ? 0 : 1;
  } else {
    // Second arrival: condition on the other party's realized output.
    const int a = (party == Party::alice) ? input : *in_[other];
    const int b = (party == Party::bob) ? input : *in_[other];
    const int theirs = *out_[other];
    const double joint0 = (party == Party::alice) ? behavior_.prob(a, b, 0, theirs)
                                                  : behavior_.prob(a, b, theirs, 0);
    const double joint1 = (party == Party::alice) ? behavior_.prob(a, b, 1, theirs)
                                                  : behavior_.prob(a, b, theirs, 1);
    const double denom = joint0 + joint1;
    // denom can only vanish through tolerance slack in a loaded table; fall
    // back to a fair coin rather than divide by zero.
    const double p0 = denom > 0.0 ? joint0 / denom : 0.5;
    out = rng_.next_bernoulli(p0) ? 0 : 1;
  }

  in_[self] = input;
  out_[self] = out;
  return out;
}

}  // namespace nsbox
