#include "sabf/sizing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sabf {

std::uint64_t optimal_bits(std::uint64_t n, double epsilon) {
  if (n == 0) throw std::invalid_argument("expected item count must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("false positive probability must lie in (0, 1)");
  const double ln2 = std::numbers::ln2;
  return static_cast<std::uint64_t>(std::ceil(-static_cast<double>(n) * std::log(epsilon) / (ln2 * ln2)));
}

std::uint32_t optimal_hash_count(std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("expected item count must be positive");
  const double k = std::round(static_cast<double>(m) / static_cast<double>(n) * std::numbers::ln2);
  return k < 1.0 ? 1u : static_cast<std::uint32_t>(k);
}

double expected_fpp(std::uint64_t n, std::uint64_t m, std::uint32_t k) {
  if (m == 0) return 1.0;
  const double fill = 1.0 - std::exp(-static_cast<double>(k) * static_cast<double>(n) / static_cast<double>(m));
  return std::pow(fill, static_cast<double>(k));
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  if (x % 3 == 0) return x == 3;
  for (std::uint64_t d = 5; d * d <= x; d += 6)
    if (x % d == 0 || x % (d + 2) == 0) return false;
  return true;
}

std::uint64_t prev_prime(std::uint64_t x) {
  for (std::uint64_t c = x; c > 2;)
    if (is_prime(--c)) return c;
  return 2;
}

std::uint64_t next_prime(std::uint64_t x) {
  for (std::uint64_t c = x + 1;; ++c)
    if (is_prime(c)) return c;
}

}  // namespace sabf
