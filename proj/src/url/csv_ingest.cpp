#include "sabf/url/csv_ingest.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace sabf::url {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_feature(std::string_view token) {
  token = trim(token);
  if (token.empty()) return 0.0;
  if (token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return std::isfinite(v) ? v : 0.0;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

IngestResult ingest_csv(std::istream& in, const IngestOptions& options) {
  std::string line;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  // Skip a UTF-8 byte order mark and leading blank lines.
  bool have_header = false;
  while (next_line()) {
    if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) {
      have_header = true;
      break;
    }
  }
  if (!have_header) throw IngestError("dataset is empty");

  const auto header = split_csv_line(line);
  IngestResult result;
  std::string first(trim(header.front()));
  for (auto& c : first) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  result.has_url_column = first == "url";
  const std::size_t offset = result.has_url_column ? 1 : 0;
  if (header.size() < offset + 2) throw IngestError("header needs at least one feature column and a label column");
  result.feature_count = header.size() - offset - 1;
  if (options.feature_count && *options.feature_count != result.feature_count)
    throw IngestError("header declares " + std::to_string(result.feature_count) + " feature columns, expected " +
                      std::to_string(*options.feature_count));
  result.padded_length = square_length(result.feature_count);

  while (next_line()) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      ++result.rejected_rows;
      continue;
    }
    const auto label = parse_label(fields.back());
    if (!label) {
      ++result.rejected_rows;
      continue;
    }
    UrlRecord record;
    if (result.has_url_column) record.url = std::string(trim(fields.front()));
    record.features.reserve(result.padded_length);
    bool ok = true;
    for (std::size_t f = 0; f < result.feature_count && ok; ++f) {
      const auto v = parse_feature(fields[offset + f]);
      ok = v.has_value();
      if (ok) record.features.push_back(*v);
    }
    if (!ok) {
      ++result.rejected_rows;
      continue;
    }
    record.features = pad_to_square(std::move(record.features));
    record.label = label;
    result.records.push_back(std::move(record));
  }
  return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open dataset " + path.string());
  return ingest_csv(in, options);
}

}  // namespace sabf::url
