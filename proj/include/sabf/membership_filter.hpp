#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace sabf {

/// Common surface shared by every filter the benchmark harness drives.
class MembershipFilter {
 public:
  virtual ~MembershipFilter() = default;

  /// Returns false only when the structure could not store the key
  /// (a cuckoo table that ran out of kicks). Bloom variants always succeed.
  virtual bool insert(std::string_view key) = 0;
  virtual bool contains(std::string_view key) const = 0;
  virtual std::size_t memory_bytes() const = 0;
  virtual std::string name() const = 0;
};

}  // namespace sabf
