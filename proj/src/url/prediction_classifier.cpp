#include "sabf/url/prediction_classifier.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace sabf::url {

PredictionClassifier::PredictionClassifier(std::unordered_map<std::string, double> scores)
    : scores_(std::move(scores)) {}

PredictionClassifier PredictionClassifier::parse(std::istream& in) {
  std::unordered_map<std::string, double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // URLs may contain commas; the score is after the last one.
    const auto comma = line.rfind(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("prediction line " + std::to_string(line_no) + " has no score");
    double score = 0.0;
    const char* first = line.data() + comma + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, score);
    if (ec != std::errc{} || ptr != last || !(score >= 0.0 && score <= 1.0))
      throw std::invalid_argument("prediction line " + std::to_string(line_no) + " has an invalid score");
    scores[line.substr(0, comma)] = score;
  }
  return PredictionClassifier(std::move(scores));
}

PredictionClassifier PredictionClassifier::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open predictions " + path.string());
  return parse(in);
}

Classification PredictionClassifier::classify(const UrlRecord& record) const {
  const auto it = scores_.find(record.url);
  if (it == scores_.end()) throw ClassifierError("no prediction for " + record.url);
  return {it->second >= 0.5 ? UrlLabel::Malignant : UrlLabel::Benign, it->second};
}

}  // namespace sabf::url
