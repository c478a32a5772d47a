#include "sabf/cuckoo_filter.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sabf {
namespace {

constexpr Seed kIndexSeed = 0x1b873593u;
constexpr Seed kFingerprintSeed = 0xcc9e2d51u;
constexpr Seed kAltSeed = 0xe6546b64u;

std::uint64_t bucket_count_for(std::uint64_t capacity) {
  if (capacity == 0) throw std::invalid_argument("cuckoo filter capacity must be positive");
  const auto needed = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(capacity) / (CuckooFilter::kSlotsPerBucket * CuckooFilter::kMaxLoad)));
  return std::bit_ceil(std::max<std::uint64_t>(needed, 1));
}

}  // namespace

CuckooFilter::CuckooFilter(std::uint64_t capacity, std::uint64_t rng_seed)
    : buckets_(bucket_count_for(capacity)), slots_(buckets_ * kSlotsPerBucket, 0), rng_state_(rng_seed | 1) {}

std::size_t CuckooFilter::memory_bytes_for(std::uint64_t capacity) {
  return static_cast<std::size_t>(bucket_count_for(capacity) * kSlotsPerBucket * sizeof(std::uint16_t));
}

std::uint64_t CuckooFilter::next_random() {
  // xorshift64*
  rng_state_ ^= rng_state_ >> 12;
  rng_state_ ^= rng_state_ << 25;
  rng_state_ ^= rng_state_ >> 27;
  return rng_state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t CuckooFilter::alt_index(std::uint64_t index, std::uint16_t fingerprint) const {
  const std::uint8_t fp_bytes[2] = {static_cast<std::uint8_t>(fingerprint), static_cast<std::uint8_t>(fingerprint >> 8)};
  return (index ^ hash(HashFunctionId::Murmur2, Bytes(fp_bytes, 2), kAltSeed)) & (buckets_ - 1);
}

CuckooFilter::Candidates CuckooFilter::locate(std::string_view key) const {
  const Bytes bytes = as_bytes(key);
  const std::uint64_t i1 = hash(HashFunctionId::Murmur2, bytes, kIndexSeed) & (buckets_ - 1);
  auto fp = static_cast<std::uint16_t>(hash(HashFunctionId::Murmur2, bytes, kFingerprintSeed) & 0xFFFF);
  if (fp == 0) fp = 1;  // 0 marks an empty slot
  return {i1, alt_index(i1, fp), fp};
}

bool CuckooFilter::bucket_has(std::uint64_t bucket, std::uint16_t fp) const {
  const std::uint16_t* b = &slots_[bucket * kSlotsPerBucket];
  for (std::size_t s = 0; s < kSlotsPerBucket; ++s)
    if (b[s] == fp) return true;
  return false;
}

bool CuckooFilter::try_place(std::uint64_t bucket, std::uint16_t fp) {
  std::uint16_t* b = &slots_[bucket * kSlotsPerBucket];
  for (std::size_t s = 0; s < kSlotsPerBucket; ++s) {
    if (b[s] == 0) {
      b[s] = fp;
      ++occupied_;
      return true;
    }
  }
  return false;
}

CuckooStatus CuckooFilter::add(std::string_view key) {
  if (victim_) return CuckooStatus::TableFull;
  const Candidates c = locate(key);
  if (try_place(c.i1, c.fingerprint) || try_place(c.i2, c.fingerprint)) return CuckooStatus::Ok;

  std::uint64_t index = (next_random() & 1) ? c.i2 : c.i1;
  std::uint16_t fp = c.fingerprint;
  for (std::size_t kick = 0; kick < kMaxKicks; ++kick) {
    const std::size_t slot = next_random() % kSlotsPerBucket;
    std::swap(fp, slots_[index * kSlotsPerBucket + slot]);
    index = alt_index(index, fp);
    if (try_place(index, fp)) return CuckooStatus::Ok;
  }
  victim_ = {index, fp};
  ++occupied_;
  return CuckooStatus::TableFull;
}

bool CuckooFilter::contains(std::string_view key) const {
  const Candidates c = locate(key);
  if (bucket_has(c.i1, c.fingerprint) || bucket_has(c.i2, c.fingerprint)) return true;
  return victim_ && victim_->second == c.fingerprint && (victim_->first == c.i1 || victim_->first == c.i2);
}

bool CuckooFilter::erase(std::string_view key) {
  const Candidates c = locate(key);
  for (auto bucket : {c.i1, c.i2}) {
    std::uint16_t* b = &slots_[bucket * kSlotsPerBucket];
    for (std::size_t s = 0; s < kSlotsPerBucket; ++s) {
      if (b[s] == c.fingerprint) {
        b[s] = 0;
        --occupied_;
        // The parked victim may now fit.
        if (victim_) {
          auto [vi, vfp] = *victim_;
          victim_.reset();
          --occupied_;
          if (!try_place(vi, vfp) && !try_place(alt_index(vi, vfp), vfp)) {
            victim_ = {vi, vfp};
            ++occupied_;
          }
        }
        return true;
      }
    }
  }
  if (victim_ && victim_->second == c.fingerprint && (victim_->first == c.i1 || victim_->first == c.i2)) {
    victim_.reset();
    --occupied_;
    return true;
  }
  return false;
}

}  // namespace sabf
