#include "secant/forms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace secant {

MonomialIndex::MonomialIndex(int n, int e) : n_(n), e_(e) {
  if (n < 1 || e < 0 || e > 255) throw std::invalid_argument("monomial index out of range");
  const int top = e + n;
  small_binom_.assign(static_cast<std::size_t>(top + 1) * n, 0);
  for (int c = 0; c <= top; ++c) {
    std::size_t v = 1;
    for (int i = 0; i < n; ++i) {
      if (i > c) v = 0;
      small_binom_[c * n + i] = v;
      if (i < c) v = v * (c - i) / (i + 1);
    }
  }
  size_ = small_binom_[(e + n - 1) * n + (n - 1)];
  exps_.assign(size_ * n, 0);
  // Enumerate all exponent vectors and drop each at its rank.
  std::vector<std::uint8_t> cur(n, 0);
  cur[0] = static_cast<std::uint8_t>(e);
  while (true) {
    std::size_t idx = rank(cur.data());
    std::copy(cur.begin(), cur.end(), exps_.begin() + idx * n);
    // next composition of e into n parts
    int i = 0;
    while (i < n - 1 && cur[i] == 0) ++i;
    if (i >= n - 1) break;
    std::uint8_t v = cur[i];
    cur[i] = 0;
    cur[0] = static_cast<std::uint8_t>(v - 1);
    ++cur[i + 1];
  }
}

const MonomialIndex& MonomialIndex::get(int n, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, e}];
  if (!slot) slot = std::make_unique<MonomialIndex>(n, e);
  return *slot;
}

std::size_t MonomialIndex::rank(const std::uint8_t* exps) const {
  std::size_t r = 0;
  int pos = -1;
  for (int i = 1; i < n_; ++i) {
    pos += exps[i - 1] + 1;
    r += small_binom_[pos * n_ + i];
  }
  return r;
}

std::size_t MonomialIndex::rank_of_sum(const std::uint8_t* a, const std::uint8_t* b) const {
  std::size_t r = 0;
  int pos = -1;
  for (int i = 1; i < n_; ++i) {
    pos += a[i - 1] + b[i - 1] + 1;
    r += small_binom_[pos * n_ + i];
  }
  return r;
}

HomogeneousForm HomogeneousForm::constant(int n, std::uint32_t c) { return {n, 0, {c}}; }

HomogeneousForm HomogeneousForm::monomial(int n, const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("exponent vector length");
  int e = 0;
  std::vector<std::uint8_t> ex(n);
  for (int i = 0; i < n; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    e += exps[i];
    ex[i] = static_cast<std::uint8_t>(exps[i]);
  }
  const MonomialIndex& idx = MonomialIndex::get(n, e);
  HomogeneousForm f{n, e, std::vector<std::uint32_t>(idx.size(), 0)};
  f.coeffs[idx.rank(ex.data())] = 1;
  return f;
}

HomogeneousForm random_form(int n, int e, std::uint64_t p, Rng& rng) {
  const MonomialIndex& idx = MonomialIndex::get(n, e);
  HomogeneousForm f{n, e, std::vector<std::uint32_t>(idx.size())};
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (auto& c : f.coeffs) c = static_cast<std::uint32_t>(coef(rng));
  return f;
}

HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g, std::uint64_t p) {
  if (f.n != g.n) throw std::invalid_argument("forms in different rings");
  const MonomialIndex& fi = MonomialIndex::get(f.n, f.degree);
  const MonomialIndex& gi = MonomialIndex::get(g.n, g.degree);
  const MonomialIndex& hi = MonomialIndex::get(f.n, f.degree + g.degree);
  std::vector<std::uint64_t> acc(hi.size(), 0);
  for (std::size_t a = 0; a < f.coeffs.size(); ++a) {
    if (!f.coeffs[a]) continue;
    const std::uint64_t fa = f.coeffs[a];
    for (std::size_t b = 0; b < g.coeffs.size(); ++b) {
      if (!g.coeffs[b]) continue;
      std::size_t k = hi.rank_of_sum(fi.exponents(a), gi.exponents(b));
      acc[k] = (acc[k] + fa * g.coeffs[b]) % p;
    }
  }
  HomogeneousForm h{f.n, f.degree + g.degree, std::vector<std::uint32_t>(hi.size())};
  for (std::size_t k = 0; k < acc.size(); ++k) h.coeffs[k] = static_cast<std::uint32_t>(acc[k]);
  return h;
}

HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g, std::uint64_t p) {
  if (f.n != g.n || f.degree != g.degree) throw std::invalid_argument("adding forms of different shape");
  HomogeneousForm h = f;
  for (std::size_t k = 0; k < h.coeffs.size(); ++k)
    h.coeffs[k] = static_cast<std::uint32_t>((std::uint64_t(h.coeffs[k]) + g.coeffs[k]) % p);
  return h;
}

std::vector<HomogeneousForm> tangent_generators(const std::vector<HomogeneousForm>& factors,
                                                std::uint64_t p) {
  const std::size_t r = factors.size();
  if (r < 2) throw std::invalid_argument("need at least two factors");
  const int n = factors[0].n;
  std::vector<HomogeneousForm> prefix(r), suffix(r);
  prefix[0] = HomogeneousForm::constant(n, 1);
  for (std::size_t k = 1; k < r; ++k) prefix[k] = multiply(prefix[k - 1], factors[k - 1], p);
  suffix[r - 1] = HomogeneousForm::constant(n, 1);
  for (std::size_t k = r - 1; k-- > 0;) suffix[k] = multiply(suffix[k + 1], factors[k + 1], p);
  std::vector<HomogeneousForm> gens(r);
  for (std::size_t k = 0; k < r; ++k) gens[k] = multiply(prefix[k], suffix[k], p);
  return gens;
}

}  // namespace secant
