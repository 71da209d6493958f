#pragma once

#include "secant/combinatorics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace secant {

// Power series known exactly through degree bound().
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int bound) : c_(static_cast<std::size_t>(bound) + 1) {}
  explicit TruncatedSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  // Zero beyond the bound instead of throwing.
  Int at(long i) const { return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  TruncatedSeries truncated(int bound) const;
  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Int> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// Sparse polynomial in t: distinct degrees, nonzero coefficients, ascending.
class SeriesNumerator {
 public:
  using Term = std::pair<int, Int>;
  SeriesNumerator() = default;
  explicit SeriesNumerator(std::vector<Term> terms);
  static SeriesNumerator one() { return SeriesNumerator({{0, Int(1)}}); }
  // (1 - t^e)
  static SeriesNumerator one_minus_power(int e);

  const std::vector<Term>& terms() const { return terms_; }
  Int coeff(int degree) const;
  int degree() const { return terms_.empty() ? 0 : terms_.back().first; }
  TruncatedSeries dense(int bound) const;
  bool operator==(const SeriesNumerator&) const = default;

 private:
  std::vector<Term> terms_;
};

SeriesNumerator operator*(const SeriesNumerator& a, const SeriesNumerator& b);

// Coefficients of num / (1 - t)^n through degree D.
TruncatedSeries expand_rational(const SeriesNumerator& num, int n, int D);

// 1 - sum_i t^{d - d_i} + (r - 1) t^d
SeriesNumerator reducible_numerator(const Partition& lambda);

SeriesNumerator series_pow(const SeriesNumerator& x, int l);
TruncatedSeries series_pow(const TruncatedSeries& x, int l);

// Keeps coefficients up to the first nonpositive one, zero from there on.
TruncatedSeries plus_truncate(const TruncatedSeries& x);

// |numerator^l / (1 - t)^n|^+ through degree D.
TruncatedSeries predicted_hilbert(int n, int l, const Partition& lambda, int D);

// Hilbert function of ideals of generic forms of the given degrees, by the
// one-form-at-a-time recursion h'_j = max(0, h_j - h_{j-e}).
TruncatedSeries froeberg_recursive(int n, const std::vector<int>& degrees, int D);

std::string to_polynomial_string(const TruncatedSeries& x);
std::string to_polynomial_string(const SeriesNumerator& x);

}  // namespace secant
