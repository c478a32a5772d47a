#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sabf/bench.hpp"

namespace sabf::url {

struct DedupResult {
  std::vector<std::string> unique;  // first occurrences the filter let through
  std::size_t suppressed_unique = 0;  // first occurrences wrongly reported as seen
  MetricsReport metrics;
};

struct DedupOptions {
  double epsilon = 0.001;
  /// Filter capacity; defaults to the stream length.
  std::optional<std::uint64_t> capacity;
  FilterSpec filter;
};

/// Streams `urls` through one filter, emitting a URL when the filter has
/// not seen it and inserting it afterwards. Outcome counts per stream item:
/// tp = repeat suppressed, fp = first occurrence suppressed, tn = first
/// occurrence emitted. fpp is thus suppressed uniques over all uniques.
/// An exact set runs alongside to label first occurrences; only the filter
/// loop is timed.
DedupResult dedup(const std::vector<std::string>& urls, const DedupOptions& options = {});

struct ExperimentResult {
  MetricsReport metrics;  // lookup over the benign set
  double insert_s = 0.0;
  double lookup_s = 0.0;
};

/// Inserts every malignant URL into a fresh filter sized for the malignant
/// set, then queries every benign URL; each positive is a false positive.
/// An empty benign set yields fpp 0.
ExperimentResult malignant_benign_experiment(const std::vector<std::string>& malignant,
                                             const std::vector<std::string>& benign, double epsilon,
                                             const FilterSpec& filter = {});

}  // namespace sabf::url
