#include "sabf/url/gateway.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <stdexcept>

namespace sabf::url {

std::string_view verdict_action(Verdict v) { return is_blocked(v) ? "BLOCKED" : "ALLOWED"; }

std::string_view verdict_source(Verdict v) {
  return (v == Verdict::BlockedByFilter || v == Verdict::AllowedByFilter) ? "filter" : "classifier";
}

bool is_blocked(Verdict v) { return v == Verdict::BlockedByFilter || v == Verdict::BlockedByClassifier; }

Gateway::Gateway(const GatewayConfig& config, std::shared_ptr<const Classifier> classifier)
    : Gateway(Filter2D(size_params(config.capacity, config.epsilon, config.hash_fn)),
              Filter2D(size_params(config.capacity, config.epsilon, config.hash_fn)), std::move(classifier)) {}

Gateway::Gateway(Filter2D malignant, Filter2D benign, std::shared_ptr<const Classifier> classifier,
                 GatewayCounters counters)
    : malignant_(std::move(malignant)),
      benign_(std::move(benign)),
      classifier_(std::move(classifier)),
      counters_(counters) {
  if (!classifier_) throw std::invalid_argument("gateway needs a classifier");
}

Verdict Gateway::check_url(const UrlRecord& record) {
  ++counters_.queries;
  if (malignant_.contains(record.url)) {
    ++counters_.malignant_filter_hits;
    return Verdict::BlockedByFilter;
  }
  if (benign_.contains(record.url)) {
    ++counters_.benign_filter_hits;
    return Verdict::AllowedByFilter;
  }
  ++counters_.classifier_invocations;
  const Classification c = classifier_->classify(record);
  if (c.label == UrlLabel::Malignant) {
    malignant_.insert(record.url);
    return Verdict::BlockedByClassifier;
  }
  benign_.insert(record.url);
  return Verdict::AllowedByClassifier;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

void Gateway::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  write_file_bytes(dir / "malignant.bf", malignant_.serialize());
  write_file_bytes(dir / "benign.bf", benign_.serialize());
  std::ofstream state(dir / "gateway.state", std::ios::trunc);
  if (!state) throw std::ios_base::failure("cannot write " + (dir / "gateway.state").string());
  state << "classifier=" << classifier_->kind() << '\n'
        << "queries=" << counters_.queries << '\n'
        << "malignant_filter_hits=" << counters_.malignant_filter_hits << '\n'
        << "benign_filter_hits=" << counters_.benign_filter_hits << '\n'
        << "classifier_invocations=" << counters_.classifier_invocations << '\n';
}

Gateway Gateway::load(const std::filesystem::path& dir, std::shared_ptr<const Classifier> classifier) {
  auto malignant = Filter2D::deserialize(read_file_bytes(dir / "malignant.bf"));
  auto benign = Filter2D::deserialize(read_file_bytes(dir / "benign.bf"));

  std::ifstream state(dir / "gateway.state");
  if (!state) throw std::ios_base::failure("cannot open " + (dir / "gateway.state").string());
  std::map<std::string, std::string, std::less<>> fields;
  for (std::string line; std::getline(state, line);) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DecodeError("malformed gateway state line: " + line);
    fields[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto number = [&](std::string_view key) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw DecodeError("gateway state lacks " + std::string(key));
    std::uint64_t v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw DecodeError("bad gateway counter " + std::string(key));
    return v;
  };
  GatewayCounters counters{number("queries"), number("malignant_filter_hits"), number("benign_filter_hits"),
                           number("classifier_invocations")};
  return Gateway(std::move(malignant), std::move(benign), std::move(classifier), counters);
}

}  // namespace sabf::url
