#include "sabf/kirsch_bloom.hpp"

#include "sabf/sizing.hpp"

namespace sabf {

KirschBloom::KirschBloom(std::uint64_t n, double epsilon)
    : m_(optimal_bits(n, epsilon)), lambda_(optimal_hash_count(m_, n)), words_((m_ + 63) / 64, 0) {}

std::size_t KirschBloom::memory_bytes_for(std::uint64_t n, double epsilon) {
  return static_cast<std::size_t>((optimal_bits(n, epsilon) + 63) / 64 * sizeof(std::uint64_t));
}

bool KirschBloom::insert(std::string_view key) {
  const Bytes bytes = as_bytes(key);
  const std::uint64_t h1 = hash(HashFunctionId::Murmur2, bytes, seed1_);
  const std::uint64_t h2 = hash(HashFunctionId::Murmur2, bytes, seed2_);
  for (std::uint32_t i = 0; i < lambda_; ++i) {
    const std::uint64_t bit = (h1 + i * h2) % m_;
    words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  }
  return true;
}

bool KirschBloom::contains(std::string_view key) const {
  const Bytes bytes = as_bytes(key);
  const std::uint64_t h1 = hash(HashFunctionId::Murmur2, bytes, seed1_);
  const std::uint64_t h2 = hash(HashFunctionId::Murmur2, bytes, seed2_);
  for (std::uint32_t i = 0; i < lambda_; ++i) {
    const std::uint64_t bit = (h1 + i * h2) % m_;
    if ((words_[bit >> 6] & (std::uint64_t{1} << (bit & 63))) == 0) return false;
  }
  return true;
}

}  // namespace sabf
