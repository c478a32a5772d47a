#include "sabf/hash.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace sabf {
namespace {

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

inline std::uint32_t load_le16(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8);
}

inline std::uint64_t load_le64(const std::uint8_t* p) {
  return std::uint64_t{load_le32(p)} | (std::uint64_t{load_le32(p + 4)} << 32);
}

constexpr std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? (0xEDB88320u ^ (c >> 1)) : (c >> 1);
    table[i] = c;
  }
  return table;
}

constexpr auto kCrcTable = make_crc_table();

constexpr std::uint32_t kFnvOffset = 0x811C9DC5u;
constexpr std::uint32_t kFnvPrime = 16777619u;

constexpr std::uint32_t kXxP1 = 2654435761u;
constexpr std::uint32_t kXxP2 = 2246822519u;
constexpr std::uint32_t kXxP3 = 3266489917u;
constexpr std::uint32_t kXxP4 = 668265263u;
constexpr std::uint32_t kXxP5 = 374761393u;

inline std::uint64_t fasthash_mix(std::uint64_t h) {
  h ^= h >> 23;
  h *= 0x2127599bf4325c37ULL;
  h ^= h >> 47;
  return h;
}

thread_local bool t_counting = false;
thread_local std::uint64_t t_calls = 0;

}  // namespace

std::string_view hash_name(HashFunctionId fn) {
  switch (fn) {
    case HashFunctionId::MMurmur: return "MMurmur";
    case HashFunctionId::Murmur2: return "Murmur2";
    case HashFunctionId::SuperFastHash: return "SuperFastHash";
    case HashFunctionId::XXHash32: return "XXHash32";
    case HashFunctionId::CRC32: return "CRC32";
    case HashFunctionId::FastHash: return "FastHash";
    case HashFunctionId::FNV1: return "FNV1";
    case HashFunctionId::FNV1a: return "FNV1a";
  }
  return "unknown";
}

std::optional<HashFunctionId> parse_hash_name(std::string_view name) {
  for (auto fn : kAllHashFunctions) {
    auto candidate = hash_name(fn);
    if (candidate.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i) {
      auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; };
      same = lower(candidate[i]) == lower(name[i]);
    }
    if (same) return fn;
  }
  return std::nullopt;
}

Digest mmurmur(Bytes key, Seed seed) {
  const std::size_t len = key.size();
  std::uint32_t h = seed ^ static_cast<std::uint32_t>(len);
  const std::size_t nblocks = len / 4;
  const std::uint8_t* p = key.data();
  for (std::size_t b = 0; b < nblocks; ++b) {
    h = std::rotl(h ^ load_le32(p + 4 * b), 13);
    h ^= h >> 7;
  }
  const std::uint8_t* tail = p + 4 * nblocks;
  for (std::size_t i = 0; i < (len & 3); ++i) h ^= std::uint32_t{tail[i]} << (8 * i);
  h ^= h >> 16;
  h ^= h << 11;
  h ^= h >> 5;
  return h;
}

Digest murmur2(Bytes key, Seed seed) {
  constexpr std::uint32_t m = 0x5bd1e995;
  constexpr int r = 24;
  std::size_t len = key.size();
  std::uint32_t h = seed ^ static_cast<std::uint32_t>(len);
  const std::uint8_t* data = key.data();
  while (len >= 4) {
    std::uint32_t k = load_le32(data);
    k *= m;
    k ^= k >> r;
    k *= m;
    h *= m;
    h ^= k;
    data += 4;
    len -= 4;
  }
  switch (len) {
    case 3: h ^= std::uint32_t{data[2]} << 16; [[fallthrough]];
    case 2: h ^= std::uint32_t{data[1]} << 8; [[fallthrough]];
    case 1:
      h ^= data[0];
      h *= m;
  }
  h ^= h >> 13;
  h *= m;
  h ^= h >> 15;
  return h;
}

Digest superfasthash(Bytes key, Seed seed) {
  std::size_t len = key.size();
  std::uint32_t hash = static_cast<std::uint32_t>(len) ^ seed;
  const std::uint8_t* data = key.data();
  const std::size_t rem = len & 3;
  for (len >>= 2; len > 0; --len) {
    hash += load_le16(data);
    const std::uint32_t tmp = (load_le16(data + 2) << 11) ^ hash;
    hash = (hash << 16) ^ tmp;
    data += 4;
    hash += hash >> 11;
  }
  // Tail bytes go through signed char in the reference code.
  switch (rem) {
    case 3:
      hash += load_le16(data);
      hash ^= hash << 16;
      hash ^= static_cast<std::uint32_t>(static_cast<std::int32_t>(static_cast<std::int8_t>(data[2]))) << 18;
      hash += hash >> 11;
      break;
    case 2:
      hash += load_le16(data);
      hash ^= hash << 11;
      hash += hash >> 17;
      break;
    case 1:
      hash += static_cast<std::uint32_t>(static_cast<std::int32_t>(static_cast<std::int8_t>(data[0])));
      hash ^= hash << 10;
      hash += hash >> 1;
      break;
  }
  hash ^= hash << 3;
  hash += hash >> 5;
  hash ^= hash << 4;
  hash += hash >> 17;
  hash ^= hash << 25;
  hash += hash >> 6;
  return hash;
}

Digest xxhash32(Bytes key, Seed seed) {
  const std::uint8_t* p = key.data();
  const std::uint8_t* const end = p + key.size();
  std::uint32_t h;
  if (key.size() >= 16) {
    const std::uint8_t* const limit = end - 16;
    std::uint32_t v1 = seed + kXxP1 + kXxP2;
    std::uint32_t v2 = seed + kXxP2;
    std::uint32_t v3 = seed;
    std::uint32_t v4 = seed - kXxP1;
    auto round = [](std::uint32_t acc, std::uint32_t input) {
      return std::rotl(acc + input * kXxP2, 13) * kXxP1;
    };
    do {
      v1 = round(v1, load_le32(p));
      v2 = round(v2, load_le32(p + 4));
      v3 = round(v3, load_le32(p + 8));
      v4 = round(v4, load_le32(p + 12));
      p += 16;
    } while (p <= limit);
    h = std::rotl(v1, 1) + std::rotl(v2, 7) + std::rotl(v3, 12) + std::rotl(v4, 18);
  } else {
    h = seed + kXxP5;
  }
  h += static_cast<std::uint32_t>(key.size());
  while (p + 4 <= end) {
    h = std::rotl(h + load_le32(p) * kXxP3, 17) * kXxP4;
    p += 4;
  }
  while (p < end) {
    h = std::rotl(h + std::uint32_t{*p} * kXxP5, 11) * kXxP1;
    ++p;
  }
  h ^= h >> 15;
  h *= kXxP2;
  h ^= h >> 13;
  h *= kXxP3;
  h ^= h >> 16;
  return h;
}

Digest crc32(Bytes key, Seed seed) {
  std::uint32_t c = 0xFFFFFFFFu ^ seed;
  for (std::uint8_t b : key) c = kCrcTable[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

std::uint64_t fasthash64(Bytes key, std::uint64_t seed) {
  constexpr std::uint64_t m = 0x880355f21e6d1965ULL;
  const std::size_t len = key.size();
  const std::uint8_t* p = key.data();
  std::uint64_t h = seed ^ (static_cast<std::uint64_t>(len) * m);
  const std::size_t words = len / 8;
  for (std::size_t w = 0; w < words; ++w) {
    h ^= fasthash_mix(load_le64(p + 8 * w));
    h *= m;
  }
  const std::uint8_t* tail = p + 8 * words;
  if (const std::size_t rem = len & 7; rem != 0) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < rem; ++i) v |= std::uint64_t{tail[i]} << (8 * i);
    h ^= fasthash_mix(v);
    h *= m;
  }
  return fasthash_mix(h);
}

Digest fasthash32(Bytes key, Seed seed) {
  // 64 -> 32 bit fold by subtracting the high half.
  const std::uint64_t h = fasthash64(key, seed);
  return static_cast<std::uint32_t>(h - (h >> 32));
}

Digest fnv1(Bytes key, Seed seed) {
  std::uint32_t h = kFnvOffset ^ seed;
  for (std::uint8_t b : key) {
    h *= kFnvPrime;
    h ^= b;
  }
  return h;
}

Digest fnv1a(Bytes key, Seed seed) {
  std::uint32_t h = kFnvOffset ^ seed;
  for (std::uint8_t b : key) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

Digest hash(HashFunctionId fn, Bytes key, Seed seed) {
  if (t_counting) ++t_calls;
  switch (fn) {
    case HashFunctionId::MMurmur: return mmurmur(key, seed);
    case HashFunctionId::Murmur2: return murmur2(key, seed);
    case HashFunctionId::SuperFastHash: return superfasthash(key, seed);
    case HashFunctionId::XXHash32: return xxhash32(key, seed);
    case HashFunctionId::CRC32: return crc32(key, seed);
    case HashFunctionId::FastHash: return fasthash32(key, seed);
    case HashFunctionId::FNV1: return fnv1(key, seed);
    case HashFunctionId::FNV1a: return fnv1a(key, seed);
  }
  throw std::invalid_argument("unknown hash function id");
}

namespace instrumentation {

void set_enabled(bool on) { t_counting = on; }
bool enabled() { return t_counting; }

std::uint64_t reset_and_read_call_counter() {
  const std::uint64_t n = t_calls;
  t_calls = 0;
  return n;
}

std::uint64_t peek_call_counter() { return t_calls; }

ScopedCounting::ScopedCounting() : previous_(t_counting) { t_counting = true; }
ScopedCounting::~ScopedCounting() { t_counting = previous_; }

}  // namespace instrumentation

namespace {

std::uint32_t parse_hex32(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad hex field: " + std::string(s));
  return v;
}

}  // namespace

GoldenVector parse_golden_line(std::string_view line) {
  std::array<std::string_view, 4> fields;
  std::size_t start = 0;
  for (std::size_t f = 0; f < 4; ++f) {
    const std::size_t comma = line.find(',', start);
    if ((f < 3) != (comma != std::string_view::npos))
      throw std::invalid_argument("golden line must have exactly four fields");
    fields[f] = line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start);
    start = comma + 1;
  }
  auto fn = parse_hash_name(fields[0]);
  if (!fn) throw std::invalid_argument("unknown hash function: " + std::string(fields[0]));
  if (fields[1].size() % 2 != 0) throw std::invalid_argument("odd-length key hex");
  GoldenVector v{*fn, {}, parse_hex32(fields[2]), parse_hex32(fields[3])};
  for (std::size_t i = 0; i < fields[1].size(); i += 2)
    v.key.push_back(static_cast<std::uint8_t>(parse_hex32(fields[1].substr(i, 2))));
  return v;
}

std::string format_golden_line(const GoldenVector& v) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(hash_name(v.fn));
  out += ',';
  for (auto b : v.key) {
    out += kHex[b >> 4];
    out += kHex[b & 0xF];
  }
  auto hex32 = [&](std::uint32_t x) {
    out += ',';
    for (int shift = 28; shift >= 0; shift -= 4) out += kHex[(x >> shift) & 0xF];
  };
  hex32(v.seed);
  hex32(v.digest);
  return out;
}

}  // namespace sabf
