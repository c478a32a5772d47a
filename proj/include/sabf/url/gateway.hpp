#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "sabf/filter2d.hpp"
#include "sabf/url/classifier.hpp"

namespace sabf::url {

enum class Verdict { BlockedByFilter, AllowedByFilter, BlockedByClassifier, AllowedByClassifier };

std::string_view verdict_action(Verdict v);  // "BLOCKED" / "ALLOWED"
std::string_view verdict_source(Verdict v);  // "filter" / "classifier"
bool is_blocked(Verdict v);

struct GatewayCounters {
  std::uint64_t queries = 0;
  std::uint64_t malignant_filter_hits = 0;
  std::uint64_t benign_filter_hits = 0;
  std::uint64_t classifier_invocations = 0;
  bool operator==(const GatewayCounters&) const = default;
};

struct GatewayConfig {
  std::uint64_t capacity = 1'000'000;  // per filter
  double epsilon = 0.001;
  HashFunctionId hash_fn = HashFunctionId::MMurmur;
};

/// Malicious-URL gate: a malignant filter and a benign filter in front of a
/// classifier. A URL known to either filter is answered without the
/// classifier; a new URL is classified once and its verdict is cached in the
/// matching filter, so every later check of it is a filter hit.
///
/// check_url mutates state; callers serialize access.
class Gateway {
 public:
  Gateway(const GatewayConfig& config, std::shared_ptr<const Classifier> classifier);
  Gateway(Filter2D malignant, Filter2D benign, std::shared_ptr<const Classifier> classifier,
          GatewayCounters counters = {});

  /// Keys both filters on the raw URL bytes. A classifier exception
  /// propagates and leaves both filters untouched.
  Verdict check_url(const UrlRecord& record);

  /// Pre-loads known verdicts (warm start without snapshots).
  void learn_malignant(std::string_view url) { malignant_.insert(url); }
  void learn_benign(std::string_view url) { benign_.insert(url); }

  const Filter2D& malignant_filter() const { return malignant_; }
  const Filter2D& benign_filter() const { return benign_; }
  const GatewayCounters& counters() const { return counters_; }
  const Classifier& classifier() const { return *classifier_; }

  /// Writes malignant.bf, benign.bf (filter snapshots) and gateway.state
  /// (classifier kind and counters as key=value lines) into `dir`.
  void save(const std::filesystem::path& dir) const;
  /// Restores a saved gateway. Throws DecodeError on corrupt snapshots or
  /// state, std::ios_base::failure when files are missing.
  static Gateway load(const std::filesystem::path& dir, std::shared_ptr<const Classifier> classifier);

 private:
  Filter2D malignant_;
  Filter2D benign_;
  std::shared_ptr<const Classifier> classifier_;
  GatewayCounters counters_;
};

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace sabf::url
