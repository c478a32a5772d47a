#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sabf/bench.hpp"

namespace sabf {

nlohmann::json to_json(const MetricsReport& r);
MetricsReport metrics_from_json(const nlohmann::json& j);

/// JSON array with one object per benchmark cell.
nlohmann::json to_json(const std::vector<MetricsReport>& rows);
void write_report(const std::filesystem::path& path, const std::vector<MetricsReport>& rows);

/// Fixed-width table for terminals.
std::string format_table(const std::vector<MetricsReport>& rows);

}  // namespace sabf
