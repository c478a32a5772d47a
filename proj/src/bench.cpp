#include "sabf/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "sabf/counting_bloom.hpp"
#include "sabf/cuckoo_filter.hpp"
#include "sabf/filter2d.hpp"
#include "sabf/kirsch_bloom.hpp"

namespace sabf {

void MetricsReport::finalize_rates() {
  fpp = false_positive_rate(fp, tn);
  accuracy_pct = 100.0 * (1.0 - fpp);
}

double mops(std::uint64_t operations, double elapsed_s) {
  if (operations == 0 || !(elapsed_s > 0.0)) return 0.0;
  return static_cast<double>(operations) / (elapsed_s * 1e6);
}

double false_positive_rate(std::uint64_t fp, std::uint64_t tn) {
  return fp + tn == 0 ? 0.0 : static_cast<double>(fp) / static_cast<double>(fp + tn);
}

MetricsReport run_lookup_bench(const MembershipFilter& filter, const KeyCorpus& workload) {
  MetricsReport r;
  r.filter = filter.name();
  r.operations = workload.size();
  r.memory_bytes = filter.memory_bytes();

  std::vector<std::uint8_t> answers(workload.size());
  instrumentation::ScopedCounting counting;
  instrumentation::reset_and_read_call_counter();
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < workload.size(); ++i) answers[i] = filter.contains(workload.keys[i]) ? 1 : 0;
  const auto stop = std::chrono::steady_clock::now();
  const std::uint64_t probes = instrumentation::reset_and_read_call_counter();

  for (std::size_t i = 0; i < workload.size(); ++i) {
    const bool member = workload.member[i] != 0;
    if (answers[i]) {
      member ? ++r.tp : ++r.fp;
    } else {
      member ? ++r.fn : ++r.tn;
    }
  }
  r.elapsed_s = std::chrono::duration<double>(stop - start).count();
  r.mops = mops(r.operations, r.elapsed_s);
  r.mean_probes = workload.size() == 0 ? 0.0 : static_cast<double>(probes) / static_cast<double>(workload.size());
  r.finalize_rates();
  return r;
}

MetricsReport run_insert_bench(MembershipFilter& filter, const KeyCorpus& inserted) {
  MetricsReport r;
  r.filter = filter.name();
  r.workload = "insert";
  r.operations = inserted.size();

  instrumentation::ScopedCounting counting;
  instrumentation::reset_and_read_call_counter();
  const auto start = std::chrono::steady_clock::now();
  for (const auto& key : inserted.keys)
    if (!filter.insert(key)) ++r.insert_failures;
  const auto stop = std::chrono::steady_clock::now();
  const std::uint64_t probes = instrumentation::reset_and_read_call_counter();

  r.elapsed_s = std::chrono::duration<double>(stop - start).count();
  r.mops = mops(r.operations, r.elapsed_s);
  r.mean_probes = inserted.size() == 0 ? 0.0 : static_cast<double>(probes) / static_cast<double>(inserted.size());
  r.memory_bytes = filter.memory_bytes();
  r.finalize_rates();
  return r;
}

std::string FilterSpec::label() const {
  switch (kind) {
    case FilterKind::Filter2D: return "Filter2D/" + std::string(hash_name(hash_fn));
    case FilterKind::Kirsch: return "Kirsch";
    case FilterKind::Counting: return "CBF";
    case FilterKind::Cuckoo: return "Cuckoo";
  }
  return "unknown";
}

std::optional<FilterKind> parse_filter_kind(std::string_view name) {
  if (name == "filter2d" || name == "2d") return FilterKind::Filter2D;
  if (name == "kirsch") return FilterKind::Kirsch;
  if (name == "cbf" || name == "counting") return FilterKind::Counting;
  if (name == "cuckoo" || name == "cf") return FilterKind::Cuckoo;
  return std::nullopt;
}

std::unique_ptr<MembershipFilter> make_filter(const FilterSpec& spec, std::uint64_t n, double epsilon) {
  switch (spec.kind) {
    case FilterKind::Filter2D: return std::make_unique<Filter2D>(size_params(n, epsilon, spec.hash_fn));
    case FilterKind::Kirsch: return std::make_unique<KirschBloom>(n, epsilon);
    case FilterKind::Counting: return std::make_unique<CountingBloom>(n, epsilon);
    case FilterKind::Cuckoo: return std::make_unique<CuckooFilter>(n);
  }
  throw std::invalid_argument("unknown filter kind");
}

std::vector<MetricsReport> compare_filters(const std::vector<FilterSpec>& specs, const CompareOptions& options) {
  const KeyCorpus inserted = gen_keys(options.n, options.seed);
  std::vector<KeyCorpus> workloads;
  for (std::size_t w = 0; w < options.workloads.size(); ++w) {
    const auto kind = options.workloads[w];
    const std::size_t count =
        kind == WorkloadKind::Same ? std::min<std::size_t>(options.queries, inserted.size()) : options.queries;
    workloads.push_back(build_workload(inserted, kind, count, options.seed + 1 + w));
  }

  std::vector<std::vector<MetricsReport>> per_filter(specs.size());
  auto run_one = [&](std::size_t f) {
    auto filter = make_filter(specs[f], options.n, options.epsilon);
    auto& rows = per_filter[f];
    rows.push_back(run_insert_bench(*filter, inserted));
    for (std::size_t w = 0; w < workloads.size(); ++w) {
      auto row = run_lookup_bench(*filter, workloads[w]);
      row.workload = std::string(workload_name(options.workloads[w]));
      rows.push_back(std::move(row));
    }
    for (auto& row : rows) {
      row.filter = specs[f].label();
      row.n = options.n;
      row.epsilon = options.epsilon;
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
  if (jobs == 1) {
    for (std::size_t f = 0; f < specs.size(); ++f) run_one(f);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t f; (f = next.fetch_add(1)) < specs.size();) run_one(f);
      });
  }

  std::vector<MetricsReport> out;
  for (auto& rows : per_filter) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

}  // namespace sabf
