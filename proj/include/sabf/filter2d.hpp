#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sabf/hash.hpp"
#include "sabf/membership_filter.hpp"

namespace sabf {

inline constexpr std::uint32_t kDefaultBeta = 61;
inline constexpr Seed kMasterSeed = 0x9E3779B9u;

/// Sizing of a two-dimensional filter. Produced by size_params(); the
/// invariants below are checked by validate().
///   - rows and cols are distinct primes
///   - 1 <= beta <= 64
///   - hash_calls == ceil(lambda / 2) and seeds.size() == hash_calls
struct Filter2DConfig {
  std::uint64_t n = 0;
  double epsilon = 0.0;
  std::uint64_t m = 0;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint32_t beta = kDefaultBeta;
  std::uint32_t lambda = 0;
  std::uint32_t hash_calls = 0;
  std::vector<Seed> seeds;
  HashFunctionId hash_fn = HashFunctionId::MMurmur;

  std::uint64_t cell_count() const { return rows * cols; }
  std::uint64_t addressable_bits() const { return cell_count() * beta; }
  std::size_t memory_bytes() const { return static_cast<std::size_t>(cell_count()) * sizeof(std::uint64_t); }

  void validate() const;
  // epsilon is informational (snapshots recover it from n and m), so it is
  // left out of equality.
  bool operator==(const Filter2DConfig& o) const {
    return n == o.n && m == o.m && rows == o.rows && cols == o.cols && beta == o.beta && lambda == o.lambda &&
           hash_calls == o.hash_calls && seeds == o.seeds && hash_fn == o.hash_fn;
  }
};

/// Derives the sizing for n items at false positive probability epsilon.
///
/// m follows the optimal Bloom bit budget and lambda the optimal hash count.
/// The bit budget is spread over c = ceil(m / 64) words arranged as a
/// rows x cols matrix bracketing s = ceil(sqrt(c)): rows is the largest
/// prime below s and cols the smallest prime above it, advanced further
/// until rows * cols >= c.
Filter2DConfig size_params(std::uint64_t n, double epsilon, HashFunctionId hash_fn = HashFunctionId::MMurmur,
                           std::uint32_t beta = kDefaultBeta);

/// Per-probe seeds: a Weyl sequence over the master seed, seed_i = master * (i + 1).
std::vector<Seed> derive_seeds(std::uint32_t count, Seed master = kMasterSeed);

struct BitAddress {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::uint32_t bit = 0;
  bool operator==(const BitAddress&) const = default;
};

inline BitAddress address(Digest h, const Filter2DConfig& config) {
  return {h % config.rows, h % config.cols, static_cast<std::uint32_t>(h % config.beta)};
}

/// Second address taken from one digest; every hash call covers two of the
/// lambda bit positions.
Digest companion_digest(Digest h);

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bloom filter over a rows x cols matrix of 64-bit cells, of which bit
/// positions [0, beta) are used.
///
/// Each key costs hash_calls digest computations. A digest h addresses
/// cell (h mod rows, h mod cols) and bit h mod beta, and its companion
/// digest addresses a second bit the same way, so lambda bits are set per
/// key. The last call sets only one bit when lambda is odd.
///
/// Not internally synchronized: one writer, or any number of readers.
class Filter2D final : public MembershipFilter {
 public:
  explicit Filter2D(Filter2DConfig config);

  bool insert(std::string_view key) override;
  bool contains(std::string_view key) const override;
  std::size_t memory_bytes() const override { return config_.memory_bytes(); }
  std::string name() const override { return "Filter2D"; }

  const Filter2DConfig& config() const { return config_; }
  std::uint64_t inserted_count() const { return inserted_count_; }
  std::span<const std::uint64_t> cells() const { return cells_; }

  std::uint64_t set_bit_count() const;
  /// Set bits over all addressable bits (rows * cols * beta).
  double fill_ratio() const;

  std::vector<std::uint8_t> serialize() const;
  static Filter2D deserialize(std::span<const std::uint8_t> bytes);

  bool operator==(const Filter2D& other) const {
    return config_ == other.config_ && inserted_count_ == other.inserted_count_ && cells_ == other.cells_;
  }

 private:
  std::uint64_t& cell(const BitAddress& a) { return cells_[a.row * config_.cols + a.col]; }
  std::uint64_t cell(const BitAddress& a) const { return cells_[a.row * config_.cols + a.col]; }
  bool probe(Digest h) const;

  Filter2DConfig config_;
  std::vector<std::uint64_t> cells_;
  std::uint64_t inserted_count_ = 0;
};

}  // namespace sabf
