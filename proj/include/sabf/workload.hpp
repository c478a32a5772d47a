#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sabf {

enum class WorkloadKind { Same, Mixed, Disjoint, Random };

inline constexpr WorkloadKind kAllWorkloads[] = {WorkloadKind::Same, WorkloadKind::Mixed, WorkloadKind::Disjoint,
                                                 WorkloadKind::Random};

std::string_view workload_name(WorkloadKind kind);
std::optional<WorkloadKind> parse_workload(std::string_view name);

/// Keys with per-key ground truth: member[i] is true when keys[i] belongs to
/// the inserted set.
struct KeyCorpus {
  std::vector<std::string> keys;
  std::vector<std::uint8_t> member;

  std::size_t size() const { return keys.size(); }
  std::size_t member_count() const;
};

/// Small deterministic generator; the same seed yields the same stream on
/// every platform, unlike the std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

 private:
  std::uint64_t state_;
};

inline constexpr std::size_t kMinKeyLength = 16;
inline constexpr std::size_t kMaxKeyLength = 64;

/// `count` pairwise-distinct printable keys, lengths uniform in [16, 64].
/// All member flags are set.
KeyCorpus gen_keys(std::size_t count, std::uint64_t seed);

/// Query corpus of the given kind over `inserted`.
///   Same     - the first `count` inserted keys (count <= inserted.size()).
///   Mixed    - count / 2 inserted keys and count / 2 fresh keys, shuffled;
///              count must be even.
///   Disjoint - fresh keys, verified absent from `inserted`.
///   Random   - independently generated keys; membership labelled post hoc.
/// Throws std::invalid_argument on an empty inserted set or bad count.
KeyCorpus build_workload(const KeyCorpus& inserted, WorkloadKind kind, std::size_t count, std::uint64_t seed);

}  // namespace sabf
