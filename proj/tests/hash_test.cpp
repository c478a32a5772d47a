#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <string>

#include "sabf/filter2d.hpp"
#include "sabf/hash.hpp"
#include "sabf/workload.hpp"

using namespace sabf;

namespace {

std::vector<GoldenVector> load_golden() {
  std::ifstream in(SABF_TEST_DATA_DIR "/hash_golden.txt");
  EXPECT_TRUE(in) << "golden file missing";
  std::vector<GoldenVector> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(parse_golden_line(line));
  return out;
}

}  // namespace

TEST(HashSuite, MatchesIndependentGoldenVectors) {
  const auto vectors = load_golden();
  ASSERT_EQ(vectors.size(), 8u * 16u * 4u);
  for (const auto& v : vectors) {
    EXPECT_EQ(hash(v.fn, Bytes(v.key), v.seed), v.digest) << format_golden_line(v);
  }
}

TEST(HashSuite, GoldenFileCoversEveryFunctionWithSixteenKeySeedPairs) {
  std::map<HashFunctionId, std::set<std::pair<std::vector<std::uint8_t>, Seed>>> pairs;
  for (const auto& v : load_golden()) pairs[v.fn].insert({v.key, v.seed});
  ASSERT_EQ(pairs.size(), 8u);
  for (const auto& [fn, set] : pairs) EXPECT_GE(set.size(), 16u) << hash_name(fn);
}

TEST(HashSuite, PublishedCheckValues) {
  EXPECT_EQ(fnv1a(as_bytes(""), 0), 0x811C9DC5u);
  EXPECT_EQ(crc32(as_bytes("123456789"), 0), 0xCBF43926u);
  EXPECT_EQ(xxhash32(as_bytes(""), 0), 0x02CC5D05u);
  EXPECT_EQ(xxhash32(as_bytes("abc"), 0), 0x32D153FFu);
  EXPECT_EQ(fnv1a(as_bytes("a"), 0), 0xE40C292Cu);
  EXPECT_EQ(fnv1(as_bytes("a"), 0), 0x050C5D7Eu);
}

TEST(HashSuite, Murmur2RoundFunctionStepByStep) {
  // "aaaa" is one block k = 0x61616161 with seed 0 and length 4.
  constexpr std::uint32_t m = 0x5bd1e995;
  std::uint32_t k = 0x61616161u;
  k *= m;
  k ^= k >> 24;
  k *= m;
  std::uint32_t h = 0u ^ 4u;
  h *= m;
  h ^= k;
  h ^= h >> 13;
  h *= m;
  h ^= h >> 15;
  EXPECT_EQ(murmur2(as_bytes("aaaa"), 0), h);
  EXPECT_EQ(h, 0x993ec4ecu);
}

TEST(HashSuite, MMurmurDefinition) {
  EXPECT_EQ(mmurmur(as_bytes(""), 0), 0u);
  // "abc", seed 1: no full block; tail bytes xor into h = 1 ^ 3.
  std::uint32_t h = 1u ^ 3u;
  h ^= 0x61u;
  h ^= 0x62u << 8;
  h ^= 0x63u << 16;
  h ^= h >> 16;
  h ^= h << 11;
  h ^= h >> 5;
  EXPECT_EQ(mmurmur(as_bytes("abc"), 1), h);
  EXPECT_EQ(h, 0x1ba8f910u);
}

TEST(HashSuite, FastHashFoldsSixtyFourBitState) {
  for (std::string_view key : {"", "a", "abcdefgh", "abcdefghi", "a fairly long key with several words"}) {
    const std::uint64_t wide = fasthash64(as_bytes(key), 7);
    EXPECT_EQ(fasthash32(as_bytes(key), 7), static_cast<std::uint32_t>(wide - (wide >> 32)));
  }
}

TEST(HashSuite, Deterministic) {
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::string key(rng.between(0, 80), '\0');
    for (auto& c : key) c = static_cast<char>(rng.next());
    const Seed seed = static_cast<Seed>(rng.next());
    for (auto fn : kAllHashFunctions) EXPECT_EQ(hash(fn, key, seed), hash(fn, key, seed));
  }
}

TEST(HashSuite, SeedSensitivityOnRandomCorpus) {
  const auto corpus = gen_keys(10'000, 11);
  for (auto fn : {HashFunctionId::Murmur2, HashFunctionId::MMurmur}) {
    std::size_t differ = 0;
    for (const auto& k : corpus.keys) differ += hash(fn, k, 0x1234u) != hash(fn, k, 0x9876u) ? 1 : 0;
    EXPECT_GE(differ, 9'900u) << hash_name(fn);
  }
}

TEST(HashSuite, NamesRoundTripAndAreDistinct) {
  std::set<std::string_view> names;
  for (auto fn : kAllHashFunctions) {
    names.insert(hash_name(fn));
    EXPECT_EQ(parse_hash_name(hash_name(fn)), fn);
  }
  EXPECT_EQ(names.size(), 8u);
  EXPECT_EQ(parse_hash_name("fnv1A"), HashFunctionId::FNV1a);
  EXPECT_FALSE(parse_hash_name("md5"));
}

TEST(HashSuite, GoldenLineFormatRoundTrip) {
  const GoldenVector v{HashFunctionId::CRC32, {0x00, 0xff, 0x10}, 0xdeadbeef, 0x01020304};
  const auto line = format_golden_line(v);
  EXPECT_EQ(line, "CRC32,00ff10,deadbeef,01020304");
  const auto back = parse_golden_line(line);
  EXPECT_EQ(back.fn, v.fn);
  EXPECT_EQ(back.key, v.key);
  EXPECT_EQ(back.seed, v.seed);
  EXPECT_EQ(back.digest, v.digest);
  EXPECT_THROW(parse_golden_line("CRC32,00,1"), std::invalid_argument);
  EXPECT_THROW(parse_golden_line("CRC32,0,1,2"), std::invalid_argument);
  EXPECT_THROW(parse_golden_line("SHA1,00,1,2"), std::invalid_argument);
}

TEST(CallCounter, CountsOnlyWhenEnabled) {
  instrumentation::ScopedCounting on;
  EXPECT_EQ(instrumentation::reset_and_read_call_counter(), 0u);
  for (int i = 0; i < 5; ++i) hash(HashFunctionId::FNV1, "x", 0);
  EXPECT_EQ(instrumentation::reset_and_read_call_counter(), 5u);
  EXPECT_EQ(instrumentation::reset_and_read_call_counter(), 0u);
  {
    instrumentation::set_enabled(false);
    hash(HashFunctionId::FNV1, "x", 0);
    instrumentation::set_enabled(true);
  }
  EXPECT_EQ(instrumentation::reset_and_read_call_counter(), 0u);
}

TEST(CallCounter, OneFilterInsertIsFiveCalls) {
  Filter2D filter(size_params(10'000'000 / 1000, 0.001));
  ASSERT_EQ(filter.config().hash_calls, 5u);
  instrumentation::ScopedCounting on;
  instrumentation::reset_and_read_call_counter();
  filter.insert("http://example.com/");
  EXPECT_EQ(instrumentation::reset_and_read_call_counter(), 5u);
}
