#pragma once

#include <cstdint>
#include <vector>

#include "sabf/hash.hpp"
#include "sabf/membership_filter.hpp"

namespace sabf {

/// Counting Bloom filter with 4-bit saturating counters, sixteen per word,
/// probed by the same double hashing as KirschBloom.
///
/// A counter that reaches 15 is stuck there: it no longer knows how many
/// keys it represents, so deletes leave it alone.
class CountingBloom final : public MembershipFilter {
 public:
  static constexpr std::uint8_t kMaxCount = 15;

  CountingBloom(std::uint64_t n, double epsilon);

  bool insert(std::string_view key) override;
  bool contains(std::string_view key) const override;
  /// Decrements the key's counters. Returns false, touches nothing and bumps
  /// suspicious_deletes() when some counter is already zero, since such a
  /// key was never inserted.
  bool erase(std::string_view key);

  std::size_t memory_bytes() const override { return words_.size() * sizeof(std::uint64_t); }
  std::string name() const override { return "CBF"; }

  std::uint64_t counter_count() const { return m_; }
  std::uint32_t hash_count() const { return lambda_; }
  std::uint8_t counter(std::uint64_t index) const;
  std::uint64_t suspicious_deletes() const { return suspicious_deletes_; }
  const std::vector<std::uint64_t>& raw_words() const { return words_; }

  static std::size_t memory_bytes_for(std::uint64_t n, double epsilon);

 private:
  void set_counter(std::uint64_t index, std::uint8_t value);
  template <typename Fn>
  void for_each_index(std::string_view key, Fn&& fn) const;

  std::uint64_t m_;
  std::uint32_t lambda_;
  Seed seed1_ = 0x9747b28cu;
  Seed seed2_ = 0x5bd1e995u;
  std::vector<std::uint64_t> words_;
  std::uint64_t suspicious_deletes_ = 0;
};

}  // namespace sabf
