#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sabf/hash.hpp"
#include "sabf/membership_filter.hpp"
#include "sabf/workload.hpp"

namespace sabf {

/// Outcome counts and timing for one benchmark cell.
struct MetricsReport {
  std::string filter;
  std::string workload;
  std::uint64_t n = 0;
  double epsilon = 0.0;
  std::uint64_t operations = 0;
  double elapsed_s = 0.0;
  double mops = 0.0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;
  double fpp = 0.0;
  double accuracy_pct = 100.0;
  double mean_probes = 0.0;
  std::uint64_t memory_bytes = 0;
  std::uint64_t insert_failures = 0;

  /// Recomputes fpp and accuracy from the outcome counts.
  void finalize_rates();
};

/// operations / (elapsed * 10^6); 0 when either input is degenerate.
double mops(std::uint64_t operations, double elapsed_s);
/// fp / (fp + tn), with 0 / 0 taken as 0.
double false_positive_rate(std::uint64_t fp, std::uint64_t tn);

/// Queries every workload key against the already populated filter and
/// classifies each answer against the ground-truth label. The clock covers
/// only the query loop. mean_probes is the per-query hash invocation count.
MetricsReport run_lookup_bench(const MembershipFilter& filter, const KeyCorpus& workload);

/// Inserts every key of `inserted` into a fresh filter and times it.
MetricsReport run_insert_bench(MembershipFilter& filter, const KeyCorpus& inserted);

enum class FilterKind { Filter2D, Kirsch, Counting, Cuckoo };

struct FilterSpec {
  FilterKind kind = FilterKind::Filter2D;
  HashFunctionId hash_fn = HashFunctionId::MMurmur;  // Filter2D only

  std::string label() const;
};

std::optional<FilterKind> parse_filter_kind(std::string_view name);
std::unique_ptr<MembershipFilter> make_filter(const FilterSpec& spec, std::uint64_t n, double epsilon);

struct CompareOptions {
  std::uint64_t n = 1'000'000;
  double epsilon = 0.001;
  std::size_t queries = 1'000'000;
  std::vector<WorkloadKind> workloads{std::begin(kAllWorkloads), std::end(kAllWorkloads)};
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

/// Builds each filter at (n, epsilon), inserts the same key corpus, and runs
/// every workload against it. Returns, per filter, one "insert" row followed
/// by one row per workload. With jobs > 1 filters run on separate threads;
/// each thread owns its filter and hash counter.
std::vector<MetricsReport> compare_filters(const std::vector<FilterSpec>& specs, const CompareOptions& options);

}  // namespace sabf
