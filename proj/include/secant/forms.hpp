#pragma once

#include "secant/field.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace secant {

// Monomials of a fixed degree e in n variables, indexed by graded colex rank:
// the exponent vector (a_1..a_n) maps to the (n-1)-subset of bar positions
// c_i = a_1 + ... + a_i + i - 1, ranked by sum_i C(c_i, i).
class MonomialIndex {
 public:
  // Shared, immutable, built on first use.
  static const MonomialIndex& get(int n, int e);

  MonomialIndex(int n, int e);
  int vars() const { return n_; }
  int degree() const { return e_; }
  std::size_t size() const { return size_; }
  const std::uint8_t* exponents(std::size_t idx) const { return &exps_[idx * n_]; }
  std::size_t rank(const std::uint8_t* exps) const;
  // Rank of the product of two monomials given by exponent vectors.
  std::size_t rank_of_sum(const std::uint8_t* a, const std::uint8_t* b) const;

 private:
  int n_, e_;
  std::size_t size_;
  std::vector<std::uint8_t> exps_;
  // small_binom_[c * n_ + i] = C(c, i)
  std::vector<std::size_t> small_binom_;
};

struct HomogeneousForm {
  int n = 0;
  int degree = 0;
  // Residues in [0, p), indexed by MonomialIndex::get(n, degree).
  std::vector<std::uint32_t> coeffs;

  static HomogeneousForm constant(int n, std::uint32_t c);
  static HomogeneousForm monomial(int n, const std::vector<int>& exps);
  bool operator==(const HomogeneousForm&) const = default;
};

HomogeneousForm random_form(int n, int e, std::uint64_t p, Rng& rng);
HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g, std::uint64_t p);
HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g, std::uint64_t p);

// G_k = prod_{j != k} F_j by prefix and suffix products.
std::vector<HomogeneousForm> tangent_generators(const std::vector<HomogeneousForm>& factors,
                                                std::uint64_t p);

}  // namespace secant
