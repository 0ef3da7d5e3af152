#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "nsbox/box_behavior.hpp"
#include "nsbox/rng.hpp"

namespace nsbox {

enum class Party { alice = 0, bob = 1 };

enum class InstanceState { fresh, alice_used, bob_used, consumed };

// One single-use box. Each party submits exactly one input bit and gets one
// output bit; across both parties the outputs are jointly distributed per
// the behavior. The first submission is answered from that party's marginal
// and the second from the conditional given the first; because behaviors are
// no-signaling the first draw does not depend on the input the other party
// will eventually choose, so either party may go first.
//
// All randomness comes from a counter stream keyed at construction. A replay
// with the same key and the same submission sequence is bit-identical;
// different submission orders agree in distribution.
class BoxInstance {
 public:
  // Throws std::domain_error if the behavior signals (tolerance kFileTol),
  // since then the one-sided marginal is not well defined.
  BoxInstance(const BoxBehavior& behavior, std::uint64_t rng_key);

  // Returns this party's output bit. Throws std::invalid_argument for inputs
  // outside {0,1}; std::logic_error if this party already submitted or the
  // instance is consumed.
  int submit(Party party, int input);

  InstanceState state() const noexcept;
  bool used(Party party) const noexcept { return in_[idx(party)].has_value(); }
  std::optional<int> input_of(Party party) const noexcept { return in_[idx(party)]; }
  std::optional<int> output_of(Party party) const noexcept { return out_[idx(party)]; }
  const BoxBehavior& behavior() const noexcept { return behavior_; }

 private:
  static constexpr int idx(Party p) noexcept { return static_cast<int>(p); }

  BoxBehavior behavior_;
  CounterRng rng_;
  std::array<std::optional<int>, 2> in_{};
  std::array<std::optional<int>, 2> out_{};
};

}  // namespace nsbox
