#include "sabf/url/experiments.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace sabf::url {

DedupResult dedup(const std::vector<std::string>& urls, const DedupOptions& options) {
  DedupResult result;
  const std::uint64_t capacity = options.capacity.value_or(std::max<std::uint64_t>(urls.size(), 1));
  auto filter = make_filter(options.filter, capacity, options.epsilon);

  std::vector<std::uint8_t> emitted(urls.size());
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < urls.size(); ++i) {
    if (!filter->contains(urls[i])) {
      emitted[i] = 1;
      filter->insert(urls[i]);
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  MetricsReport& m = result.metrics;
  std::unordered_set<std::string_view> seen;
  seen.reserve(urls.size());
  for (std::size_t i = 0; i < urls.size(); ++i) {
    const bool first = seen.insert(urls[i]).second;
    if (emitted[i]) {
      result.unique.push_back(urls[i]);
      first ? ++m.tn : ++m.fn;
    } else {
      first ? ++m.fp : ++m.tp;
    }
  }
  result.suppressed_unique = m.fp;
  m.filter = options.filter.label();
  m.workload = "dedup";
  m.n = capacity;
  m.epsilon = options.epsilon;
  m.operations = urls.size();
  m.elapsed_s = std::chrono::duration<double>(stop - start).count();
  m.mops = mops(m.operations, m.elapsed_s);
  m.memory_bytes = filter->memory_bytes();
  m.finalize_rates();
  return result;
}

ExperimentResult malignant_benign_experiment(const std::vector<std::string>& malignant,
                                             const std::vector<std::string>& benign, double epsilon,
                                             const FilterSpec& spec) {
  auto filter = make_filter(spec, std::max<std::uint64_t>(malignant.size(), 1), epsilon);

  ExperimentResult result;
  auto start = std::chrono::steady_clock::now();
  for (const auto& u : malignant) filter->insert(u);
  auto stop = std::chrono::steady_clock::now();
  result.insert_s = std::chrono::duration<double>(stop - start).count();

  KeyCorpus probes;
  probes.keys = benign;
  probes.member.assign(benign.size(), 0);
  result.metrics = run_lookup_bench(*filter, probes);
  result.lookup_s = result.metrics.elapsed_s;
  result.metrics.filter = spec.label();
  result.metrics.workload = "benign";
  result.metrics.n = malignant.size();
  result.metrics.epsilon = epsilon;
  return result;
}

}  // namespace sabf::url
