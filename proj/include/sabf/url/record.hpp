#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sabf::url {

enum class UrlLabel { Malignant, Benign };

inline constexpr std::size_t kUrlFeatureCount = 79;

struct UrlRecord {
  std::string url;
  std::vector<double> features;  // zero-padded to a square length
  std::optional<UrlLabel> label;
};

std::string_view label_name(UrlLabel label);

/// benign -> Benign; spam, defacement, malware, phishing (and "malignant")
/// -> Malignant. Case-insensitive; nullopt for anything else.
std::optional<UrlLabel> parse_label(std::string_view text);

/// Smallest perfect square >= count (79 -> 81, 7 -> 9).
std::size_t square_length(std::size_t count);

/// Appends zeros up to square_length(features.size()).
std::vector<double> pad_to_square(std::vector<double> features);

}  // namespace sabf::url
