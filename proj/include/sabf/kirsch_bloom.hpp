#pragma once

#include <cstdint>
#include <vector>

#include "sabf/hash.hpp"
#include "sabf/membership_filter.hpp"

namespace sabf {

/// Flat Bloom filter with Kirsch-Mitzenmacher double hashing: probe i sits
/// at (h1 + i * h2) mod m, so every operation costs two Murmur2 digests
/// regardless of the hash count.
class KirschBloom final : public MembershipFilter {
 public:
  KirschBloom(std::uint64_t n, double epsilon);

  bool insert(std::string_view key) override;
  bool contains(std::string_view key) const override;
  std::size_t memory_bytes() const override { return words_.size() * sizeof(std::uint64_t); }
  std::string name() const override { return "Kirsch"; }

  std::uint64_t bit_count() const { return m_; }
  std::uint32_t hash_count() const { return lambda_; }

  /// Bytes needed for the bit array at (n, epsilon) without allocating it.
  static std::size_t memory_bytes_for(std::uint64_t n, double epsilon);

 private:
  std::uint64_t m_;
  std::uint32_t lambda_;
  Seed seed1_ = 0x9747b28cu;
  Seed seed2_ = 0x5bd1e995u;
  std::vector<std::uint64_t> words_;
};

}  // namespace sabf
