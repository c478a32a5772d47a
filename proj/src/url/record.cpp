#include "sabf/url/record.hpp"

#include <cctype>
#include <cmath>

namespace sabf::url {

std::string_view label_name(UrlLabel label) {
  return label == UrlLabel::Malignant ? "malignant" : "benign";
}

std::optional<UrlLabel> parse_label(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "benign") return UrlLabel::Benign;
  if (lower == "spam" || lower == "defacement" || lower == "malware" || lower == "phishing" || lower == "malignant")
    return UrlLabel::Malignant;
  return std::nullopt;
}

std::size_t square_length(std::size_t count) {
  auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(count)));
  while (side * side < count) ++side;
  while (side > 0 && (side - 1) * (side - 1) >= count) --side;
  return side * side;
}

std::vector<double> pad_to_square(std::vector<double> features) {
  features.resize(square_length(features.size()), 0.0);
  return features;
}

}  // namespace sabf::url
