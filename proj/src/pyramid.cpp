#include "nsbox/pyramid.hpp"

#include <bit>
#include <stdexcept>

namespace nsbox {

PyramidStrategy::PyramidStrategy(const BoxBehavior& behavior, int depth, std::uint64_t rng_key)
    : behavior_(behavior), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("pyramid depth must be >= 0");
  if (depth >= 31) throw std::invalid_argument("pyramid depth too large");
  const std::size_t count = (std::size_t{1} << depth) - 1;
  boxes_.reserve(count);
  for (std::size_t node = 0; node < count; ++node)
    boxes_.emplace_back(behavior_, derive_key(rng_key, node));
}

std::size_t PyramidStrategy::level_size(int level) const {
  if (level < 1 || level > depth_) throw std::invalid_argument("level out of range");
  return std::size_t{1} << (depth_ - level);
}

BoxInstance& PyramidStrategy::box_at(int level, std::size_t index_in_level) {
  if (index_in_level >= level_size(level)) throw std::invalid_argument("box index out of range");
  const std::size_t row_start = (std::size_t{1} << (depth_ - level)) - 1;
  return boxes_[row_start + index_in_level];
}

int PyramidStrategy::encode_node(std::size_t node, int level, std::span<const int> data) {
  if (level == 0) return data[node - (data_bits() - 1)];
  const int left = encode_node(2 * node + 1, level - 1, data);
  const int right = encode_node(2 * node + 2, level - 1, data);
  const int a_out = boxes_[node].submit(Party::alice, left ^ right);
  return left ^ a_out;
}

int PyramidStrategy::encode(std::span<const int> data) {
  if (encoded_) throw std::logic_error("pyramid already encoded");
  if (data.size() != data_bits())
    throw std::invalid_argument("data length must equal 2^depth");
  for (int bit : data)
    if (bit != 0 && bit != 1) throw std::invalid_argument("data bits must be 0 or 1");
  message_ = (depth_ == 0) ? data[0] : encode_node(0, depth_, data);
  encoded_ = true;
  return message_;
}

int PyramidStrategy::message() const {
  if (!encoded_) throw std::logic_error("pyramid not encoded yet");
  return message_;
}

DecodeResult PyramidStrategy::decode(int message, std::size_t target, DecodeMode mode) {
  if (!encoded_) throw std::logic_error("decode requires a prior encode");
  if (decoded_) throw std::logic_error("pyramid already decoded");
  if (message != 0 && message != 1) throw std::invalid_argument("message must be 0 or 1");
  if (target >= data_bits()) throw std::invalid_argument("target index out of range");

  DecodeResult result;
  result.guess = message;
  result.path.reserve(static_cast<std::size_t>(depth_));
  std::size_t node = 0;
  for (int level = depth_; level >= 1; --level) {
    const int digit = static_cast<int>((target >> (level - 1)) & 1u);
    if (mode == DecodeMode::all_levels) {
      // Feed the digit to every box on this level; only the path box's
      // output enters the guess. Boxes have independent streams, so this
      // leaves the path outputs bit-identical to path_only mode.
      const std::size_t row_start = (std::size_t{1} << (depth_ - level)) - 1;
      for (std::size_t i = 0; i < level_size(level); ++i)
        boxes_[row_start + i].submit(Party::bob, digit);
    } else {
      boxes_[node].submit(Party::bob, digit);
    }
    const BoxInstance& box = boxes_[node];
    PathStep step;
    step.level = level;
    step.node = node;
    step.alice_input = *box.input_of(Party::alice);
    step.alice_output = *box.output_of(Party::alice);
    step.bob_input = digit;
    step.bob_output = *box.output_of(Party::bob);
    step.faulted = (step.alice_output ^ step.bob_output) != (step.alice_input & step.bob_input);
    result.path.push_back(step);
    result.guess ^= step.bob_output;
    node = 2 * node + 1 + static_cast<std::size_t>(digit);
  }
  decoded_ = true;
  return result;
}

std::vector<int> pad_to_power_of_two(std::span<const int> data) {
  if (data.empty()) throw std::invalid_argument("cannot pad an empty data vector");
  const std::size_t padded = std::bit_ceil(data.size());
  std::vector<int> out(data.begin(), data.end());
  out.resize(padded, 0);
  return out;
}

int depth_for_bits(std::size_t bits) {
  if (bits == 0) throw std::invalid_argument("bit count must be >= 1");
  return static_cast<int>(std::bit_width(std::bit_ceil(bits)) - 1);
}

}  // namespace nsbox
