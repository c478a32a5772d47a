#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sabf/url/record.hpp"

namespace sabf::url {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IngestOptions {
  /// Number of numeric feature columns the header must carry; nullopt
  /// accepts whatever the header declares.
  std::optional<std::size_t> feature_count = kUrlFeatureCount;
};

struct IngestResult {
  std::vector<UrlRecord> records;
  std::size_t rejected_rows = 0;
  std::size_t feature_count = 0;   // before padding
  std::size_t padded_length = 0;
  bool has_url_column = false;
};

/// Reads a header row followed by data rows of the form
/// `[url,] f1..fk, label`. The url column is recognised by a header named
/// "url". NaN, empty, and other non-finite numeric fields become 0.0;
/// labels collapse to Malignant/Benign; features are zero-padded to the
/// next square length. Rows with the wrong arity, an unparseable number, or
/// an unknown label are skipped and counted. Throws IngestError on empty
/// input or a header that does not match the options.
IngestResult ingest_csv(std::istream& in, const IngestOptions& options = {});
IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& options = {});

/// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace sabf::url
