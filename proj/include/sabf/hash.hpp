#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sabf {

/// The string hash routines available to the filters. All produce 32-bit
/// digests over raw bytes and are read little-endian regardless of host.
enum class HashFunctionId : std::uint8_t {
  MMurmur = 0,
  Murmur2 = 1,
  SuperFastHash = 2,
  XXHash32 = 3,
  CRC32 = 4,
  FastHash = 5,
  FNV1 = 6,
  FNV1a = 7,
};

inline constexpr std::array<HashFunctionId, 8> kAllHashFunctions = {
    HashFunctionId::MMurmur,  HashFunctionId::Murmur2, HashFunctionId::SuperFastHash,
    HashFunctionId::XXHash32, HashFunctionId::CRC32,   HashFunctionId::FastHash,
    HashFunctionId::FNV1,     HashFunctionId::FNV1a,
};

using Digest = std::uint32_t;
using Seed = std::uint32_t;
using Bytes = std::span<const std::uint8_t>;

inline Bytes as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string_view hash_name(HashFunctionId fn);
std::optional<HashFunctionId> parse_hash_name(std::string_view name);

// Individual routines. Routines without a native seed fold it into their
// initial state by XOR.
Digest mmurmur(Bytes key, Seed seed);
Digest murmur2(Bytes key, Seed seed);
Digest superfasthash(Bytes key, Seed seed);
Digest xxhash32(Bytes key, Seed seed);
Digest crc32(Bytes key, Seed seed);
Digest fasthash32(Bytes key, Seed seed);
std::uint64_t fasthash64(Bytes key, std::uint64_t seed);
Digest fnv1(Bytes key, Seed seed);
Digest fnv1a(Bytes key, Seed seed);

/// Dispatches to the named routine and bumps the calling thread's
/// instrumentation counter when it is enabled.
Digest hash(HashFunctionId fn, Bytes key, Seed seed);

inline Digest hash(HashFunctionId fn, std::string_view key, Seed seed) {
  return hash(fn, as_bytes(key), seed);
}

namespace instrumentation {

// The counter is thread-local so that independent benchmark cells running
// on separate threads each see only their own calls.
void set_enabled(bool on);
bool enabled();
std::uint64_t reset_and_read_call_counter();
std::uint64_t peek_call_counter();

/// Enables counting for its lifetime and restores the previous state.
class ScopedCounting {
 public:
  ScopedCounting();
  ~ScopedCounting();
  ScopedCounting(const ScopedCounting&) = delete;
  ScopedCounting& operator=(const ScopedCounting&) = delete;

 private:
  bool previous_;
};

}  // namespace instrumentation

/// One record of the golden-vector file: `function,hex-key-bytes,seed-hex,digest-hex`.
struct GoldenVector {
  HashFunctionId fn;
  std::vector<std::uint8_t> key;
  Seed seed;
  Digest digest;
};

GoldenVector parse_golden_line(std::string_view line);
std::string format_golden_line(const GoldenVector& v);

}  // namespace sabf
