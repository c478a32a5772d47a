#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include <json.hpp>

#include "sabf/url/classifier.hpp"

namespace sabf::url {

/// Logistic regression over standardized feature vectors.
class LinearClassifier final : public Classifier {
 public:
  LinearClassifier() = default;
  LinearClassifier(std::vector<double> weights, double bias, std::vector<double> mean, std::vector<double> scale);

  Classification classify(const UrlRecord& record) const override;
  std::string kind() const override { return "linear"; }

  /// Probability of Malignant.
  double score(std::span<const double> features) const;

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }

  nlohmann::json to_json() const;
  static LinearClassifier from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static LinearClassifier load(const std::filesystem::path& path);

 private:
  friend struct Trainer;
  std::vector<double> weights_;
  double bias_ = 0.0;
  std::vector<double> mean_;
  std::vector<double> scale_;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

/// 60% training; the remainder is divided 85/15 into validation and test.
/// Floors go to training and validation, so 14479 -> 8687 / 4923 / 869.
SplitSizes split_sizes(std::size_t n);

struct TrainOptions {
  std::size_t epochs = 300;
  double learning_rate = 0.5;
  std::uint64_t seed = 42;
};

struct SplitMetrics {
  double accuracy = 0.0;  // percent
  double loss = 0.0;      // mean cross-entropy
};

struct TrainReport {
  SplitSizes sizes;
  SplitMetrics train;
  SplitMetrics validation;
  SplitMetrics test;
  std::size_t epochs = 0;
};

struct TrainResult {
  LinearClassifier model;
  TrainReport report;
};

/// Full-batch gradient descent on cross-entropy after a seeded shuffle and
/// split. Every record needs a label and both classes must be present;
/// std::invalid_argument otherwise.
TrainResult train_baseline(const std::vector<UrlRecord>& records, const TrainOptions& options = {});

/// Accuracy and loss of `model` over the labelled records.
SplitMetrics evaluate(const LinearClassifier& model, const std::vector<const UrlRecord*>& records);

}  // namespace sabf::url
