#include "sabf/workload.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sabf {
namespace {

std::string random_key(SplitMix64& rng) {
  std::string key(rng.between(kMinKeyLength, kMaxKeyLength), ' ');
  for (auto& c : key) c = static_cast<char>(rng.between(0x21, 0x7E));
  return key;
}

// Appends `count` keys that are neither in `exclude` nor already generated.
void append_fresh(KeyCorpus& out, std::size_t count, SplitMix64& rng,
                  const std::unordered_set<std::string_view>& exclude) {
  std::unordered_set<std::string> seen;
  seen.reserve(count);
  while (count > 0) {
    std::string key = random_key(rng);
    if (exclude.contains(key) || seen.contains(key)) continue;
    seen.insert(key);
    out.keys.push_back(std::move(key));
    out.member.push_back(0);
    --count;
  }
}

std::unordered_set<std::string_view> index_of(const KeyCorpus& corpus) {
  std::unordered_set<std::string_view> set(corpus.keys.begin(), corpus.keys.end());
  return set;
}

template <typename T>
void shuffle_together(std::vector<std::string>& keys, std::vector<T>& labels, SplitMix64& rng) {
  for (std::size_t i = keys.size(); i > 1; --i) {
    const std::size_t j = rng.next() % i;
    std::swap(keys[i - 1], keys[j]);
    std::swap(labels[i - 1], labels[j]);
  }
}

}  // namespace

std::string_view workload_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::Same: return "same";
    case WorkloadKind::Mixed: return "mixed";
    case WorkloadKind::Disjoint: return "disjoint";
    case WorkloadKind::Random: return "random";
  }
  return "unknown";
}

std::optional<WorkloadKind> parse_workload(std::string_view name) {
  for (auto kind : kAllWorkloads)
    if (workload_name(kind) == name) return kind;
  return std::nullopt;
}

std::size_t KeyCorpus::member_count() const {
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), std::uint8_t{1}));
}

KeyCorpus gen_keys(std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("key count must be positive");
  SplitMix64 rng(seed);
  KeyCorpus out;
  out.keys.reserve(count);
  append_fresh(out, count, rng, {});
  std::fill(out.member.begin(), out.member.end(), std::uint8_t{1});
  return out;
}

KeyCorpus build_workload(const KeyCorpus& inserted, WorkloadKind kind, std::size_t count, std::uint64_t seed) {
  if (inserted.keys.empty()) throw std::invalid_argument("inserted corpus is empty");
  SplitMix64 rng(seed);
  KeyCorpus out;
  out.keys.reserve(count);
  out.member.reserve(count);

  switch (kind) {
    case WorkloadKind::Same: {
      if (count > inserted.size()) throw std::invalid_argument("same workload larger than inserted set");
      out.keys.assign(inserted.keys.begin(), inserted.keys.begin() + static_cast<std::ptrdiff_t>(count));
      out.member.assign(count, 1);
      break;
    }
    case WorkloadKind::Mixed: {
      if (count % 2 != 0) throw std::invalid_argument("mixed workload needs an even query count");
      const std::size_t half = count / 2;
      if (half > inserted.size()) throw std::invalid_argument("mixed workload larger than inserted set");
      // Partial Fisher-Yates over indices picks `half` distinct members.
      std::vector<std::size_t> idx(inserted.size());
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t i = 0; i < half; ++i) {
        const std::size_t j = i + rng.next() % (idx.size() - i);
        std::swap(idx[i], idx[j]);
        out.keys.push_back(inserted.keys[idx[i]]);
        out.member.push_back(1);
      }
      append_fresh(out, half, rng, index_of(inserted));
      shuffle_together(out.keys, out.member, rng);
      break;
    }
    case WorkloadKind::Disjoint:
      append_fresh(out, count, rng, index_of(inserted));
      break;
    case WorkloadKind::Random: {
      const auto members = index_of(inserted);
      for (std::size_t i = 0; i < count; ++i) {
        out.keys.push_back(random_key(rng));
        out.member.push_back(members.contains(out.keys.back()) ? 1 : 0);
      }
      break;
    }
  }
  return out;
}

}  // namespace sabf
