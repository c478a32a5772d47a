#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sabf/hash.hpp"
#include "sabf/membership_filter.hpp"

namespace sabf {

enum class CuckooStatus { Ok, TableFull };

/// Cuckoo filter with 4-slot buckets and 16-bit fingerprints.
///
/// A key's candidate buckets are i1 = h(key) mod B and
/// i2 = i1 XOR (h(fingerprint) mod B); B is a power of two so the XOR map
/// is an involution. Insertion relocates at most kMaxKicks fingerprints.
/// When the chain runs out the last displaced fingerprint is parked in a
/// one-entry victim slot, so no stored key is lost, and the filter reports
/// TableFull from then on.
///
/// Lookups never modify the table.
class CuckooFilter final : public MembershipFilter {
 public:
  static constexpr std::size_t kSlotsPerBucket = 4;
  static constexpr std::size_t kMaxKicks = 500;
  static constexpr double kMaxLoad = 0.95;

  /// Sizes the table so that `capacity` items fit at no more than 95% load.
  explicit CuckooFilter(std::uint64_t capacity, std::uint64_t rng_seed = 0x2545F4914F6CDD1DULL);

  CuckooStatus add(std::string_view key);
  bool insert(std::string_view key) override { return add(key) == CuckooStatus::Ok; }
  bool contains(std::string_view key) const override;
  /// Removes one matching fingerprint; false when none matches.
  bool erase(std::string_view key);

  std::size_t memory_bytes() const override { return slots_.size() * sizeof(std::uint16_t); }
  std::string name() const override { return "Cuckoo"; }

  std::uint64_t bucket_count() const { return buckets_; }
  std::uint64_t size() const { return occupied_; }
  double load_factor() const { return static_cast<double>(occupied_) / static_cast<double>(slots_.size()); }
  const std::vector<std::uint16_t>& raw_slots() const { return slots_; }

  static std::size_t memory_bytes_for(std::uint64_t capacity);

 private:
  struct Candidates {
    std::uint64_t i1;
    std::uint64_t i2;
    std::uint16_t fingerprint;
  };

  Candidates locate(std::string_view key) const;
  std::uint64_t alt_index(std::uint64_t index, std::uint16_t fingerprint) const;
  bool bucket_has(std::uint64_t bucket, std::uint16_t fp) const;
  bool try_place(std::uint64_t bucket, std::uint16_t fp);
  std::uint64_t next_random();

  std::uint64_t buckets_;
  std::vector<std::uint16_t> slots_;
  std::uint64_t occupied_ = 0;
  std::optional<std::pair<std::uint64_t, std::uint16_t>> victim_;
  std::uint64_t rng_state_;
};

}  // namespace sabf
