#include "sabf/counting_bloom.hpp"

#include "sabf/sizing.hpp"

namespace sabf {

CountingBloom::CountingBloom(std::uint64_t n, double epsilon)
    : m_(optimal_bits(n, epsilon)), lambda_(optimal_hash_count(m_, n)), words_((m_ + 15) / 16, 0) {}

std::size_t CountingBloom::memory_bytes_for(std::uint64_t n, double epsilon) {
  return static_cast<std::size_t>((optimal_bits(n, epsilon) + 15) / 16 * sizeof(std::uint64_t));
}

std::uint8_t CountingBloom::counter(std::uint64_t index) const {
  return static_cast<std::uint8_t>((words_[index >> 4] >> ((index & 15) * 4)) & 0xF);
}

void CountingBloom::set_counter(std::uint64_t index, std::uint8_t value) {
  const unsigned shift = static_cast<unsigned>(index & 15) * 4;
  auto& w = words_[index >> 4];
  w = (w & ~(std::uint64_t{0xF} << shift)) | (std::uint64_t{value} << shift);
}

template <typename Fn>
void CountingBloom::for_each_index(std::string_view key, Fn&& fn) const {
  const Bytes bytes = as_bytes(key);
  const std::uint64_t h1 = hash(HashFunctionId::Murmur2, bytes, seed1_);
  const std::uint64_t h2 = hash(HashFunctionId::Murmur2, bytes, seed2_);
  for (std::uint32_t i = 0; i < lambda_; ++i)
    if (!fn((h1 + i * h2) % m_)) return;
}

bool CountingBloom::insert(std::string_view key) {
  for_each_index(key, [this](std::uint64_t idx) {
    if (const auto c = counter(idx); c < kMaxCount) set_counter(idx, static_cast<std::uint8_t>(c + 1));
    return true;
  });
  return true;
}

bool CountingBloom::contains(std::string_view key) const {
  bool present = true;
  for_each_index(key, [&](std::uint64_t idx) { return present = counter(idx) > 0; });
  return present;
}

bool CountingBloom::erase(std::string_view key) {
  // Indices repeat when h2 is a multiple of m; collect them so the presence
  // check and the decrement see the same multiset.
  std::vector<std::uint64_t> indices;
  indices.reserve(lambda_);
  for_each_index(key, [&](std::uint64_t idx) {
    indices.push_back(idx);
    return true;
  });
  for (auto idx : indices) {
    if (counter(idx) == 0) {
      ++suspicious_deletes_;
      return false;
    }
  }
  for (auto idx : indices) {
    if (const auto c = counter(idx); c > 0 && c < kMaxCount) set_counter(idx, static_cast<std::uint8_t>(c - 1));
  }
  return true;
}

}  // namespace sabf
