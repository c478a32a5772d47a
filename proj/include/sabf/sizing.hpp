#pragma once

#include <cstdint>

namespace sabf {

/// Bits needed for n items at false positive probability epsilon:
/// ceil(-n ln(epsilon) / (ln 2)^2). Throws std::invalid_argument on n == 0
/// or epsilon outside (0, 1).
std::uint64_t optimal_bits(std::uint64_t n, double epsilon);

/// round(m / n * ln 2), at least 1.
std::uint32_t optimal_hash_count(std::uint64_t m, std::uint64_t n);

/// Expected false positive probability (1 - e^{-k n / m})^k.
double expected_fpp(std::uint64_t n, std::uint64_t m, std::uint32_t k);

bool is_prime(std::uint64_t x);
/// Largest prime strictly below x; 2 when none exists.
std::uint64_t prev_prime(std::uint64_t x);
/// Smallest prime strictly above x.
std::uint64_t next_prime(std::uint64_t x);

inline constexpr double kMiB = 1024.0 * 1024.0;

}  // namespace sabf
