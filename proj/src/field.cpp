#include "secant/field.hpp"

#include <stdexcept>

namespace secant {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q)
    if (v % q == 0) return false;
  return true;
}

void PrimeFieldConfig::validate() const {
  // Products of two centered residues summed over a few thousand terms must
  // stay exact in a double mantissa.
  if (p < 3 || p >= (std::uint64_t(1) << 26) || !is_prime(p))
    throw std::invalid_argument("prime must be an odd prime below 2^26");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace secant
