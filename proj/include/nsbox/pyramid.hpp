#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsbox/box_instance.hpp"

namespace nsbox {

enum class DecodeMode {
  path_only,   // query only the boxes on the root-to-leaf path
  all_levels,  // query every box of each level with that level's digit
};

struct PathStep {
  int level = 0;          // depth() at the root, 1 just above the leaves
  std::size_t node = 0;   // heap index
  int alice_input = 0, alice_output = 0;
  int bob_input = 0, bob_output = 0;
  bool faulted = false;   // this box broke A xor B = a.b
};

struct DecodeResult {
  int guess = 0;
  std::vector<PathStep> path;  // root first
};

// Complete binary tree of 2^depth - 1 single-use boxes. Alice folds 2^depth
// data bits into one message bit; Bob walks a single root-to-leaf path to
// recover whichever data bit his target index selects. Each internal node
// takes the xor of its children's values as the Alice input, and the node's
// value is the left child's value xor the Alice output; the root value is
// the message. Bob feeds target digit (level-1) into the level's path box
// and the same digit picks the child to descend to (0 = left); his guess is
// the message xored with every Bob output he collected. With perfectly
// correlated boxes the guess is exact; depth 0 is the boxless one-bit case.
class PyramidStrategy {
 public:
  // Behavior must be no-signaling; depth must be >= 0 (and small enough
  // that 2^depth fits in memory). Box streams are keyed as
  // derive_key(rng_key, heap index).
  PyramidStrategy(const BoxBehavior& behavior, int depth, std::uint64_t rng_key);

  int depth() const noexcept { return depth_; }
  std::size_t data_bits() const noexcept { return std::size_t{1} << depth_; }
  std::size_t box_count() const noexcept { return boxes_.size(); }

  // Number of boxes on a level: 2^(depth - level) for level in [1, depth].
  std::size_t level_size(int level) const;
  BoxInstance& box_at(int level, std::size_t index_in_level);

  // Consumes the Alice side of every box. data.size() must equal
  // data_bits() and every bit must be 0/1 (std::invalid_argument);
  // re-encoding throws std::logic_error.
  int encode(std::span<const int> data);

  bool encoded() const noexcept { return encoded_; }
  int message() const;

  // Requires a prior encode and an unconsumed Bob side; target must be
  // below data_bits(). The message is normally the announced bit; passing
  // its flip flips the guess.
  DecodeResult decode(int message, std::size_t target, DecodeMode mode = DecodeMode::path_only);

 private:
  int encode_node(std::size_t node, int level, std::span<const int> data);

  BoxBehavior behavior_;
  int depth_;
  std::vector<BoxInstance> boxes_;  // heap order: root 0, children 2i+1, 2i+2
  bool encoded_ = false;
  bool decoded_ = false;
  int message_ = 0;
};

// Zero-extends data to the next power of two (identity when already one).
// Decoding guarantees for targets below the original length are unchanged.
std::vector<int> pad_to_power_of_two(std::span<const int> data);

// Smallest depth n with 2^n >= bits (bits >= 1).
int depth_for_bits(std::size_t bits);

}  // namespace nsbox
