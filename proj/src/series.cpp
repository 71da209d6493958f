#include "secant/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace secant {

TruncatedSeries TruncatedSeries::truncated(int bound) const {
  std::vector<Int> c(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i) c[i] = at(i);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.bound(), b.bound()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.bound(), b.bound()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.bound(), b.bound()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SeriesNumerator::SeriesNumerator(std::vector<Term> terms) {
  std::map<int, Int> acc;
  for (auto& [deg, c] : terms) {
    if (deg < 0) throw std::invalid_argument("negative degree in numerator");
    acc[deg] += c;
  }
  for (auto& [deg, c] : acc)
    if (c != 0) terms_.emplace_back(deg, c);
}

SeriesNumerator SeriesNumerator::one_minus_power(int e) {
  return SeriesNumerator({{0, Int(1)}, {e, Int(-1)}});
}

Int SeriesNumerator::coeff(int degree) const {
  for (auto& [deg, c] : terms_)
    if (deg == degree) return c;
  return 0;
}

TruncatedSeries SeriesNumerator::dense(int bound) const {
  TruncatedSeries out(bound);
  for (auto& [deg, c] : terms_)
    if (deg <= bound) out[deg] = c;
  return out;
}

SeriesNumerator operator*(const SeriesNumerator& a, const SeriesNumerator& b) {
  std::vector<SeriesNumerator::Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (auto& [da, ca] : a.terms())
    for (auto& [db, cb] : b.terms()) terms.emplace_back(da + db, ca * cb);
  return SeriesNumerator(std::move(terms));
}

TruncatedSeries expand_rational(const SeriesNumerator& num, int n, int D) {
  if (D < 0) throw std::invalid_argument("truncation bound must be nonnegative");
  if (n < 0) throw std::invalid_argument("negative pole order");
  TruncatedSeries out(D);
  for (auto& [deg, c] : num.terms())
    for (int j = deg; j <= D; ++j) out[j] += c * monomial_count(n, j - deg);
  return out;
}

SeriesNumerator reducible_numerator(const Partition& lambda) {
  std::vector<SeriesNumerator::Term> terms{{0, Int(1)}};
  for (int p : lambda.parts()) terms.emplace_back(lambda.d() - p, Int(-1));
  terms.emplace_back(lambda.d(), Int(lambda.r() - 1));
  return SeriesNumerator(std::move(terms));
}

SeriesNumerator series_pow(const SeriesNumerator& x, int l) {
  if (l < 0) throw std::invalid_argument("negative exponent");
  SeriesNumerator result = SeriesNumerator::one(), base = x;
  for (; l > 0; l >>= 1) {
    if (l & 1) result = result * base;
    if (l > 1) base = base * base;
  }
  return result;
}

TruncatedSeries series_pow(const TruncatedSeries& x, int l) {
  if (l < 0) throw std::invalid_argument("negative exponent");
  TruncatedSeries result(x.bound());
  result[0] = 1;
  TruncatedSeries base = x;
  for (; l > 0; l >>= 1) {
    if (l & 1) result = result * base;
    if (l > 1) base = base * base;
  }
  return result;
}

TruncatedSeries plus_truncate(const TruncatedSeries& x) {
  TruncatedSeries out(x.bound());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0) break;
    out[i] = x[i];
  }
  return out;
}

TruncatedSeries predicted_hilbert(int n, int l, const Partition& lambda, int D) {
  return plus_truncate(expand_rational(series_pow(reducible_numerator(lambda), l), n, D));
}

TruncatedSeries froeberg_recursive(int n, const std::vector<int>& degrees, int D) {
  TruncatedSeries h(D);
  for (int j = 0; j <= D; ++j) h[j] = monomial_count(n, j);
  for (int e : degrees) {
    TruncatedSeries next(D);
    for (int j = 0; j <= D; ++j) {
      Int v = h[j] - h.at(j - e);
      next[j] = v > 0 ? v : Int(0);
    }
    h = std::move(next);
  }
  return h;
}

namespace {

std::string render_terms(const std::vector<std::pair<int, Int>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& [deg, c] : terms) {
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || deg == 0) out += mag.str();
    if (deg >= 1) out += "t";
    if (deg >= 2) out += "^" + std::to_string(deg);
  }
  return out;
}

}  // namespace

std::string to_polynomial_string(const TruncatedSeries& x) {
  std::vector<std::pair<int, Int>> terms;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) terms.emplace_back(static_cast<int>(i), x[i]);
  return render_terms(terms);
}

std::string to_polynomial_string(const SeriesNumerator& x) { return render_terms(x.terms()); }

}  // namespace secant
