#include "sabf/url/linear_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "sabf/workload.hpp"

namespace sabf::url {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double target(const UrlRecord& r) { return *r.label == UrlLabel::Malignant ? 1.0 : 0.0; }

}  // namespace

LinearClassifier::LinearClassifier(std::vector<double> weights, double bias, std::vector<double> mean,
                                   std::vector<double> scale)
    : weights_(std::move(weights)), bias_(bias), mean_(std::move(mean)), scale_(std::move(scale)) {
  if (mean_.size() != weights_.size() || scale_.size() != weights_.size())
    throw std::invalid_argument("weight, mean and scale vectors must have equal length");
}

double LinearClassifier::score(std::span<const double> features) const {
  if (features.size() != weights_.size()) throw ClassifierError("feature vector has the wrong length");
  double z = bias_;
  for (std::size_t i = 0; i < weights_.size(); ++i) z += weights_[i] * (features[i] - mean_[i]) / scale_[i];
  return sigmoid(z);
}

Classification LinearClassifier::classify(const UrlRecord& record) const {
  const double s = score(record.features);
  return {s >= 0.5 ? UrlLabel::Malignant : UrlLabel::Benign, s};
}

nlohmann::json LinearClassifier::to_json() const {
  return {{"kind", kind()}, {"weights", weights_}, {"bias", bias_}, {"mean", mean_}, {"scale", scale_}};
}

LinearClassifier LinearClassifier::from_json(const nlohmann::json& j) {
  if (j.value("kind", std::string{}) != "linear") throw std::invalid_argument("not a linear classifier model");
  return {j.at("weights").get<std::vector<double>>(), j.at("bias").get<double>(),
          j.at("mean").get<std::vector<double>>(), j.at("scale").get<std::vector<double>>()};
}

void LinearClassifier::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write model " + path.string());
  out << to_json().dump(2) << '\n';
}

LinearClassifier LinearClassifier::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open model " + path.string());
  return from_json(nlohmann::json::parse(in));
}

SplitSizes split_sizes(std::size_t n) {
  SplitSizes s;
  s.train = n * 6 / 10;
  const std::size_t rest = n - s.train;
  s.validation = rest * 85 / 100;
  s.test = rest - s.validation;
  return s;
}

SplitMetrics evaluate(const LinearClassifier& model, const std::vector<const UrlRecord*>& records) {
  SplitMetrics m;
  if (records.empty()) return m;
  std::size_t correct = 0;
  double loss = 0.0;
  for (const auto* r : records) {
    const double p = std::clamp(model.score(r->features), 1e-12, 1.0 - 1e-12);
    const double y = target(*r);
    loss -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
    correct += ((p >= 0.5) == (y == 1.0)) ? 1 : 0;
  }
  m.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(records.size());
  m.loss = loss / static_cast<double>(records.size());
  return m;
}

struct Trainer {
  static TrainResult run(const std::vector<UrlRecord>& records, const TrainOptions& options) {
    if (records.empty()) throw std::invalid_argument("no training records");
    const std::size_t dim = records.front().features.size();
    bool saw_malignant = false;
    bool saw_benign = false;
    for (const auto& r : records) {
      if (!r.label) throw std::invalid_argument("every training record needs a label");
      if (r.features.size() != dim) throw std::invalid_argument("feature vectors differ in length");
      (*r.label == UrlLabel::Malignant ? saw_malignant : saw_benign) = true;
    }
    if (!saw_malignant || !saw_benign) throw std::invalid_argument("training data must contain both classes");

    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(options.seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.next() % i]);

    TrainResult result;
    result.report.sizes = split_sizes(records.size());
    const auto& sizes = result.report.sizes;
    std::vector<const UrlRecord*> train, validation, test;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const UrlRecord* r = &records[order[i]];
      if (i < sizes.train) train.push_back(r);
      else if (i < sizes.train + sizes.validation) validation.push_back(r);
      else test.push_back(r);
    }
    if (train.empty()) throw std::invalid_argument("too few records to train");

    // Standardize on training statistics; constant columns keep scale 1.
    LinearClassifier& model = result.model;
    model.weights_.assign(dim, 0.0);
    model.mean_.assign(dim, 0.0);
    model.scale_.assign(dim, 1.0);
    const double count = static_cast<double>(train.size());
    for (const auto* r : train)
      for (std::size_t d = 0; d < dim; ++d) model.mean_[d] += r->features[d] / count;
    std::vector<double> var(dim, 0.0);
    for (const auto* r : train)
      for (std::size_t d = 0; d < dim; ++d) {
        const double delta = r->features[d] - model.mean_[d];
        var[d] += delta * delta / count;
      }
    for (std::size_t d = 0; d < dim; ++d)
      if (var[d] > 1e-24) model.scale_[d] = std::sqrt(var[d]);

    std::vector<std::vector<double>> x(train.size(), std::vector<double>(dim));
    std::vector<double> y(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      for (std::size_t d = 0; d < dim; ++d) x[i][d] = (train[i]->features[d] - model.mean_[d]) / model.scale_[d];
      y[i] = target(*train[i]);
    }

    std::vector<double> grad(dim);
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
      std::fill(grad.begin(), grad.end(), 0.0);
      double grad_bias = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double z = model.bias_;
        for (std::size_t d = 0; d < dim; ++d) z += model.weights_[d] * x[i][d];
        const double err = sigmoid(z) - y[i];
        for (std::size_t d = 0; d < dim; ++d) grad[d] += err * x[i][d];
        grad_bias += err;
      }
      const double step = options.learning_rate / count;
      for (std::size_t d = 0; d < dim; ++d) model.weights_[d] -= step * grad[d];
      model.bias_ -= step * grad_bias;
    }

    result.report.epochs = options.epochs;
    result.report.train = evaluate(model, train);
    result.report.validation = evaluate(model, validation);
    result.report.test = evaluate(model, test);
    return result;
  }
};

TrainResult train_baseline(const std::vector<UrlRecord>& records, const TrainOptions& options) {
  return Trainer::run(records, options);
}

}  // namespace sabf::url
