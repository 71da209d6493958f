#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace secant {

struct PrimeFieldConfig {
  std::uint64_t p = 1'000'003;
  int trials = 3;
  std::uint64_t seed = 20240611;
  // Resource guard: largest graded piece (in monomials) the oracle will touch.
  std::size_t max_columns = 250'000;
  // Resource guard on the working set of one elimination.
  std::size_t max_bytes = std::size_t(3) << 30;
  // Choose the linear factors of [d-1,1] as coordinate forms and eliminate them.
  bool reduce_linear = true;

  // Throws std::invalid_argument if p is not a prime in [3, 2^26) or trials < 1.
  void validate() const;
};

bool is_prime(std::uint64_t v);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Stateless 64-bit mixer used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed for the stream identified by a root seed and a path of labels.
template <class... Labels>
std::uint64_t derive_seed(std::uint64_t root, Labels... labels) {
  std::uint64_t h = mix64(root);
  ((h = mix64(h ^ mix64(static_cast<std::uint64_t>(labels) + 0x632be59bd9b4e019ULL))), ...);
  return h;
}

using Rng = std::mt19937_64;

}  // namespace secant
