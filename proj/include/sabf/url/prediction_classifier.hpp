#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>

#include "sabf/url/classifier.hpp"

namespace sabf::url {

/// Replays scores produced offline by an external model. Input lines are
/// `url,score` with score in [0, 1]; a score of 0.5 or more means Malignant.
/// Classifying a URL absent from the file throws ClassifierError.
class PredictionClassifier final : public Classifier {
 public:
  explicit PredictionClassifier(std::unordered_map<std::string, double> scores);

  static PredictionClassifier parse(std::istream& in);
  static PredictionClassifier load(const std::filesystem::path& path);

  Classification classify(const UrlRecord& record) const override;
  std::string kind() const override { return "predictions"; }
  std::size_t size() const { return scores_.size(); }

 private:
  std::unordered_map<std::string, double> scores_;
};

}  // namespace sabf::url
