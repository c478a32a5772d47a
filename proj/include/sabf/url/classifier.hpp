#pragma once

#include <stdexcept>
#include <string>

#include "sabf/url/record.hpp"

namespace sabf::url {

struct Classification {
  UrlLabel label = UrlLabel::Benign;
  double score = 0.0;  // probability of Malignant, in [0, 1]
};

class ClassifierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary URL oracle consulted by the gateway for URLs neither filter knows.
/// Implementations must be deterministic for a fixed trained state and may
/// throw ClassifierError.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Classification classify(const UrlRecord& record) const = 0;
  virtual std::string kind() const = 0;
};

}  // namespace sabf::url
