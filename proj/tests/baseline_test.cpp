#include <gtest/gtest.h>

#include <cmath>

#include "sabf/counting_bloom.hpp"
#include "sabf/cuckoo_filter.hpp"
#include "sabf/kirsch_bloom.hpp"
#include "sabf/sizing.hpp"
#include "sabf/workload.hpp"

using namespace sabf;

namespace {

std::size_t calls_for(const std::function<void()>& fn) {
  instrumentation::ScopedCounting on;
  instrumentation::reset_and_read_call_counter();
  fn();
  return instrumentation::reset_and_read_call_counter();
}

template <typename F>
double disjoint_fpp(const F& filter, const KeyCorpus& inserted, std::size_t queries, std::uint64_t seed) {
  const auto probes = build_workload(inserted, WorkloadKind::Disjoint, queries, seed);
  std::size_t fp = 0;
  for (const auto& k : probes.keys) fp += filter.contains(k) ? 1 : 0;
  return static_cast<double>(fp) / static_cast<double>(queries);
}

}  // namespace

TEST(Kirsch, MemoryMatchesFlatBitArray) {
  const double expected = std::ceil(1e7 * -std::log(0.001) / (std::log(2.0) * std::log(2.0)));
  EXPECT_NEAR(KirschBloom::memory_bytes_for(10'000'000, 0.001) / kMiB, expected / 8 / kMiB, 1e-5);
  EXPECT_NEAR(KirschBloom::memory_bytes_for(10'000'000, 0.001) / kMiB, 17.14, 0.01);
  KirschBloom k(1000, 0.01);
  EXPECT_EQ(k.bit_count(), 9586u);
  EXPECT_EQ(k.hash_count(), 7u);
  EXPECT_EQ(k.memory_bytes(), (9586u + 63) / 64 * 8);
}

TEST(Kirsch, TwoDigestsPerOperation) {
  KirschBloom k(1000, 0.0001);
  ASSERT_GT(k.hash_count(), 2u);
  EXPECT_EQ(calls_for([&] { k.insert("a"); }), 2u);
  EXPECT_EQ(calls_for([&] { (void)k.contains("a"); }), 2u);
  EXPECT_EQ(calls_for([&] { (void)k.contains("zzz"); }), 2u);
}

TEST(Kirsch, NoFalseNegativesAndBoundedFpp) {
  KirschBloom k(50'000, 0.01);
  const auto ins = gen_keys(50'000, 2);
  for (const auto& s : ins.keys) k.insert(s);
  for (const auto& s : ins.keys) ASSERT_TRUE(k.contains(s));
  EXPECT_LE(disjoint_fpp(k, ins, 100'000, 3), 0.015);
}

TEST(CountingBloom, FourTimesTheBitArray) {
  for (std::uint64_t n : {1000ull, 1'000'000ull, 10'000'000ull}) {
    // Equal up to the last partially used word of each array.
    const double cbf = static_cast<double>(CountingBloom::memory_bytes_for(n, 0.001));
    const double flat = static_cast<double>(KirschBloom::memory_bytes_for(n, 0.001));
    EXPECT_LE(std::abs(cbf - 4 * flat), 32.0) << n;
  }
  EXPECT_NEAR(CountingBloom::memory_bytes_for(10'000'000, 0.001) / kMiB, 68.56, 0.01);
  CountingBloom c(1000, 0.01);
  EXPECT_EQ(c.counter_count(), 9586u);
  EXPECT_EQ(c.raw_words().size(), (9586u + 15) / 16);
}

TEST(CountingBloom, InsertThenEraseRestoresCounters) {
  CountingBloom c(2000, 0.01);
  const auto base = gen_keys(1000, 4);
  for (const auto& k : base.keys) c.insert(k);
  const auto before = c.raw_words();
  const auto extra = gen_keys(500, 5);
  for (const auto& k : extra.keys) c.insert(k);
  for (const auto& k : extra.keys) ASSERT_TRUE(c.erase(k));
  EXPECT_EQ(c.raw_words(), before);
  for (const auto& k : base.keys) ASSERT_TRUE(c.contains(k));
  EXPECT_EQ(c.suspicious_deletes(), 0u);
}

TEST(CountingBloom, EraseOfAbsentKeyIsRefused) {
  CountingBloom c(100, 0.01);
  c.insert("present");
  const auto before = c.raw_words();
  EXPECT_FALSE(c.erase("never inserted"));
  EXPECT_EQ(c.raw_words(), before);
  EXPECT_EQ(c.suspicious_deletes(), 1u);
  EXPECT_TRUE(c.erase("present"));
  EXPECT_FALSE(c.contains("present"));
}

TEST(CountingBloom, CountersSaturateAndStick) {
  CountingBloom c(100, 0.01);
  for (int i = 0; i < 20; ++i) c.insert("hot");
  std::size_t at_max = 0;
  for (std::uint64_t i = 0; i < c.counter_count(); ++i) {
    ASSERT_LE(c.counter(i), CountingBloom::kMaxCount);
    at_max += c.counter(i) == CountingBloom::kMaxCount ? 1 : 0;
  }
  EXPECT_GE(at_max, 1u);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(c.erase("hot"));
  // Saturated counters no longer know their count, so the key stays.
  EXPECT_TRUE(c.contains("hot"));
}

TEST(Cuckoo, SizingIsPowerOfTwoAtBoundedLoad) {
  CuckooFilter f(1000);
  EXPECT_EQ(f.bucket_count(), 512u);  // ceil(1000 / 3.8) = 264 -> 512
  EXPECT_EQ(f.memory_bytes(), 512u * 4 * 2);
  EXPECT_EQ(CuckooFilter::memory_bytes_for(10'000'000), (std::size_t{1} << 22) * 4 * 2);
  EXPECT_THROW(CuckooFilter(0), std::invalid_argument);
}

TEST(Cuckoo, LookupsLeaveTableUntouched) {
  CuckooFilter f(10'000);
  const auto ins = gen_keys(10'000, 6);
  for (const auto& k : ins.keys) ASSERT_EQ(f.add(k), CuckooStatus::Ok);
  const auto image = f.raw_slots();
  const auto size = f.size();
  for (const auto& k : gen_keys(20'000, 7).keys) (void)f.contains(k);
  EXPECT_EQ(f.raw_slots(), image);
  EXPECT_EQ(f.size(), size);
  for (const auto& k : ins.keys) ASSERT_TRUE(f.contains(k));
}

TEST(Cuckoo, FalsePositiveRateNearFingerprintBound) {
  // 2 buckets x 4 slots of 16-bit fingerprints: at most 8 / 65535 ~ 1.2e-4
  // at full load.
  CuckooFilter f(100'000);
  const auto ins = gen_keys(100'000, 8);
  for (const auto& k : ins.keys) ASSERT_TRUE(f.insert(k));
  EXPECT_LE(disjoint_fpp(f, ins, 200'000, 9), 2.4e-4);
}

TEST(Cuckoo, EraseRemovesOneCopy) {
  CuckooFilter f(100);
  ASSERT_TRUE(f.insert("x"));
  ASSERT_TRUE(f.insert("x"));
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.erase("x"));
  EXPECT_TRUE(f.contains("x"));
  EXPECT_TRUE(f.erase("x"));
  EXPECT_FALSE(f.contains("x"));
  EXPECT_FALSE(f.erase("x"));
  EXPECT_EQ(f.size(), 0u);
}

TEST(Cuckoo, OverfillReportsTableFullWithoutLosingKeys) {
  CuckooFilter f(100);
  const auto keys = gen_keys(1000, 10);
  std::size_t stored = 0;
  for (; stored < keys.size(); ++stored) {
    if (f.add(keys.keys[stored]) == CuckooStatus::TableFull) {
      ++stored;  // the displaced fingerprint is parked, not dropped
      break;
    }
  }
  ASSERT_LT(stored, keys.size());
  EXPECT_GT(f.load_factor(), 0.9);
  for (std::size_t i = 0; i < stored; ++i) ASSERT_TRUE(f.contains(keys.keys[i])) << i;
  EXPECT_EQ(f.add("one more"), CuckooStatus::TableFull);
  EXPECT_TRUE(f.erase(keys.keys[0]));
  EXPECT_EQ(f.size(), stored - 1);
}
