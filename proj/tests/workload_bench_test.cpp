#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "sabf/bench.hpp"
#include "sabf/filter2d.hpp"
#include "sabf/report.hpp"
#include "sabf/workload.hpp"

using namespace sabf;

TEST(Workload, KeysAreDistinctPrintableAndBounded) {
  const auto c = gen_keys(20'000, 1);
  ASSERT_EQ(c.size(), 20'000u);
  EXPECT_EQ(c.member_count(), 20'000u);
  std::unordered_set<std::string> seen(c.keys.begin(), c.keys.end());
  EXPECT_EQ(seen.size(), c.size());
  for (const auto& k : c.keys) {
    ASSERT_GE(k.size(), kMinKeyLength);
    ASSERT_LE(k.size(), kMaxKeyLength);
    ASSERT_TRUE(std::all_of(k.begin(), k.end(), [](char ch) { return ch >= 0x21 && ch <= 0x7E; }));
  }
  EXPECT_THROW(gen_keys(0, 1), std::invalid_argument);
}

TEST(Workload, SameSeedSameCorpus) {
  EXPECT_EQ(gen_keys(500, 9).keys, gen_keys(500, 9).keys);
  EXPECT_NE(gen_keys(500, 9).keys, gen_keys(500, 10).keys);
}

TEST(Workload, KindsCarryCorrectLabels) {
  const auto ins = gen_keys(10'000, 2);
  const std::unordered_set<std::string> set(ins.keys.begin(), ins.keys.end());
  for (auto kind : kAllWorkloads) {
    const auto w = build_workload(ins, kind, 2000, 3);
    ASSERT_EQ(w.size(), 2000u) << workload_name(kind);
    for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(w.member[i] != 0, set.contains(w.keys[i]));
  }
  EXPECT_EQ(build_workload(ins, WorkloadKind::Same, 2000, 3).member_count(), 2000u);
  EXPECT_EQ(build_workload(ins, WorkloadKind::Mixed, 2000, 3).member_count(), 1000u);
  EXPECT_EQ(build_workload(ins, WorkloadKind::Disjoint, 2000, 3).member_count(), 0u);
}

TEST(Workload, RejectsBadRequests) {
  const auto ins = gen_keys(10, 2);
  EXPECT_THROW(build_workload(ins, WorkloadKind::Mixed, 7, 1), std::invalid_argument);
  EXPECT_THROW(build_workload(ins, WorkloadKind::Same, 11, 1), std::invalid_argument);
  EXPECT_THROW(build_workload(KeyCorpus{}, WorkloadKind::Disjoint, 4, 1), std::invalid_argument);
}

TEST(Workload, NamesRoundTrip) {
  for (auto kind : kAllWorkloads) EXPECT_EQ(parse_workload(workload_name(kind)), kind);
  EXPECT_FALSE(parse_workload("zipf"));
}

TEST(Metrics, Formulas) {
  EXPECT_NEAR(mops(10'000'000, 1.784254), 5.6046, 1e-4);
  EXPECT_EQ(mops(0, 1.0), 0.0);
  EXPECT_EQ(mops(10, 0.0), 0.0);
  EXPECT_EQ(false_positive_rate(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(false_positive_rate(1, 999), 0.001);
  MetricsReport r;
  r.fp = 3;
  r.tn = 997;
  r.finalize_rates();
  EXPECT_DOUBLE_EQ(r.fpp, 0.003);
  EXPECT_DOUBLE_EQ(r.accuracy_pct, 99.7);
}

TEST(Bench, LookupCountsAndProbes) {
  const std::uint64_t n = 20'000;
  Filter2D f(size_params(n, 0.001));
  const auto ins = gen_keys(n, 4);
  const auto insert_row = run_insert_bench(f, ins);
  EXPECT_EQ(insert_row.operations, n);
  EXPECT_DOUBLE_EQ(insert_row.mean_probes, f.config().hash_calls);

  const auto same = run_lookup_bench(f, build_workload(ins, WorkloadKind::Same, 10'000, 5));
  EXPECT_EQ(same.tp, 10'000u);
  EXPECT_EQ(same.fn, 0u);
  EXPECT_EQ(same.fpp, 0.0);
  EXPECT_DOUBLE_EQ(same.mean_probes, f.config().hash_calls);

  const auto mixed = run_lookup_bench(f, build_workload(ins, WorkloadKind::Mixed, 10'000, 6));
  const auto disjoint = run_lookup_bench(f, build_workload(ins, WorkloadKind::Disjoint, 10'000, 7));
  EXPECT_EQ(mixed.fn, 0u);
  EXPECT_EQ(disjoint.tp + disjoint.fn, 0u);
  EXPECT_LT(disjoint.mean_probes, mixed.mean_probes);
  EXPECT_LT(mixed.mean_probes, same.mean_probes);
  EXPECT_GE(disjoint.mean_probes, 1.0);
  EXPECT_EQ(disjoint.memory_bytes, f.memory_bytes());
}

TEST(Bench, CompareProducesInsertAndWorkloadRows) {
  CompareOptions opts;
  opts.n = 5000;
  opts.queries = 4000;
  opts.jobs = 2;
  const std::vector<FilterSpec> specs{{FilterKind::Filter2D, HashFunctionId::MMurmur},
                                      {FilterKind::Kirsch, HashFunctionId::MMurmur},
                                      {FilterKind::Counting, HashFunctionId::MMurmur},
                                      {FilterKind::Cuckoo, HashFunctionId::MMurmur}};
  const auto rows = compare_filters(specs, opts);
  ASSERT_EQ(rows.size(), specs.size() * 5);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(rows[i * 5].workload, "insert");
    EXPECT_EQ(rows[i * 5].filter, specs[i].label());
    for (std::size_t w = 1; w < 5; ++w) {
      EXPECT_EQ(rows[i * 5 + w].fn, 0u) << rows[i * 5 + w].filter << " " << rows[i * 5 + w].workload;
      EXPECT_EQ(rows[i * 5 + w].operations, 4000u);
    }
  }
  // Same thread count or not, results are reproducible.
  opts.jobs = 1;
  const auto again = compare_filters(specs, opts);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].fp, again[i].fp);
  EXPECT_NEAR(static_cast<double>(rows[2 * 5].memory_bytes) / static_cast<double>(rows[1 * 5].memory_bytes), 4.0, 0.01);
}

TEST(Bench, FilterKindParsing) {
  EXPECT_EQ(parse_filter_kind("2d"), FilterKind::Filter2D);
  EXPECT_EQ(parse_filter_kind("kirsch"), FilterKind::Kirsch);
  EXPECT_EQ(parse_filter_kind("cbf"), FilterKind::Counting);
  EXPECT_EQ(parse_filter_kind("cuckoo"), FilterKind::Cuckoo);
  EXPECT_FALSE(parse_filter_kind("quotient"));
  EXPECT_EQ((FilterSpec{FilterKind::Filter2D, HashFunctionId::XXHash32}.label()), "Filter2D/XXHash32");
}

TEST(Report, JsonRoundTripAndFile) {
  MetricsReport r;
  r.filter = "Kirsch";
  r.workload = "disjoint";
  r.n = 1000;
  r.epsilon = 0.001;
  r.operations = 500;
  r.elapsed_s = 0.25;
  r.mops = 0.002;
  r.fp = 1;
  r.tn = 499;
  r.finalize_rates();
  r.mean_probes = 2;
  r.memory_bytes = 4096;
  const auto back = metrics_from_json(to_json(r));
  EXPECT_EQ(back.filter, r.filter);
  EXPECT_EQ(back.workload, r.workload);
  EXPECT_EQ(back.fp, 1u);
  EXPECT_DOUBLE_EQ(back.fpp, r.fpp);
  EXPECT_EQ(back.memory_bytes, 4096u);

  const auto path = std::filesystem::temp_directory_path() / "sabf_report_test.json";
  write_report(path, {r, r});
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  std::filesystem::remove(path);
  EXPECT_NE(format_table({r}).find("Kirsch"), std::string::npos);
}
