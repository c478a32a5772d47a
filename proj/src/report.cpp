#include "sabf/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sabf {

nlohmann::json to_json(const MetricsReport& r) {
  return {
      {"filter", r.filter},
      {"workload", r.workload},
      {"n", r.n},
      {"epsilon", r.epsilon},
      {"operations", r.operations},
      {"elapsed_s", r.elapsed_s},
      {"mops", r.mops},
      {"tp", r.tp},
      {"fp", r.fp},
      {"tn", r.tn},
      {"fn", r.fn},
      {"fpp", r.fpp},
      {"accuracy_pct", r.accuracy_pct},
      {"mean_probes", r.mean_probes},
      {"memory_bytes", r.memory_bytes},
      {"insert_failures", r.insert_failures},
  };
}

MetricsReport metrics_from_json(const nlohmann::json& j) {
  MetricsReport r;
  r.filter = j.at("filter").get<std::string>();
  r.workload = j.at("workload").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.epsilon = j.at("epsilon").get<double>();
  r.operations = j.value("operations", std::uint64_t{0});
  r.elapsed_s = j.at("elapsed_s").get<double>();
  r.mops = j.at("mops").get<double>();
  r.tp = j.at("tp").get<std::uint64_t>();
  r.fp = j.at("fp").get<std::uint64_t>();
  r.tn = j.at("tn").get<std::uint64_t>();
  r.fn = j.at("fn").get<std::uint64_t>();
  r.fpp = j.at("fpp").get<double>();
  r.accuracy_pct = j.at("accuracy_pct").get<double>();
  r.mean_probes = j.at("mean_probes").get<double>();
  r.memory_bytes = j.at("memory_bytes").get<std::uint64_t>();
  r.insert_failures = j.value("insert_failures", std::uint64_t{0});
  return r;
}

nlohmann::json to_json(const std::vector<MetricsReport>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

void write_report(const std::filesystem::path& path, const std::vector<MetricsReport>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  out << to_json(rows).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

std::string format_table(const std::vector<MetricsReport>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "filter" << std::setw(10) << "workload" << std::right << std::setw(11)
     << "elapsed_s" << std::setw(9) << "mops" << std::setw(10) << "tp" << std::setw(9) << "fp" << std::setw(10) << "tn"
     << std::setw(5) << "fn" << std::setw(11) << "fpp" << std::setw(10) << "accuracy" << std::setw(8) << "probes"
     << std::setw(12) << "memory_MiB" << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(24) << r.filter << std::setw(10) << r.workload << std::right << std::fixed
       << std::setprecision(4) << std::setw(11) << r.elapsed_s << std::setprecision(3) << std::setw(9) << r.mops
       << std::setw(10) << r.tp << std::setw(9) << r.fp << std::setw(10) << r.tn << std::setw(5) << r.fn
       << std::setprecision(6) << std::setw(11) << r.fpp << std::setprecision(4) << std::setw(10) << r.accuracy_pct
       << std::setprecision(3) << std::setw(8) << r.mean_probes << std::setprecision(3) << std::setw(12)
       << static_cast<double>(r.memory_bytes) / (1024.0 * 1024.0) << '\n';
  }
  return os.str();
}

}  // namespace sabf
