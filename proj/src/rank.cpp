#include "secant/rank.hpp"

#include "secant/field.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>

namespace secant {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<RowMat, 0, Eigen::OuterStride<>>;

constexpr std::size_t kBlockRows = 128;
constexpr std::size_t kChunkRows = 512;
// Adding and subtracting 1.5 * 2^52 rounds to the nearest integer.
constexpr double kRoundMagic = 6755399441055744.0;

struct Reducer {
  double p, invp;
  explicit Reducer(std::uint64_t prime) : p(double(prime)), invp(1.0 / double(prime)) {}
  double one(double a) const {
    double q = (a * invp + kRoundMagic) - kRoundMagic;
    return a - p * q;
  }
  void span(double* a, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) {
      double q = (a[i] * invp + kRoundMagic) - kRoundMagic;
      a[i] -= p * q;
    }
  }
};

}  // namespace

struct ModularRank::State {
  std::uint64_t prime;
  Reducer red;
  // Products of two reduced residues that may be summed before reducing.
  std::size_t kmax;
  std::vector<std::uint32_t> pivcol;   // original column of each stored row
  std::vector<std::uint32_t> freecol;  // original column of each stored column
  std::vector<char> live;
  std::size_t dead = 0;
  std::vector<std::vector<double>> chunks;
  std::vector<std::size_t> chunk_rows;
  std::vector<double> bp, bq, xp, y;
  std::vector<std::size_t> yrow, newpiv;
  std::vector<double> f;

  explicit State(std::uint64_t p) : prime(p), red(p) {
    double half = double(p / 2 + 1);
    kmax = static_cast<std::size_t>((9007199254740992.0 - 2.0 * double(p)) / (half * half));
    if (kmax < 2) throw std::invalid_argument("prime too large for exact double accumulation");
    kmax -= 1;
  }

  std::size_t q() const { return freecol.size(); }
  double centered_inverse(double v) const {
    long long c = static_cast<long long>(v) % static_cast<long long>(prime);
    if (c < 0) c += static_cast<long long>(prime);
    auto inv = static_cast<long long>(inv_mod(static_cast<std::uint64_t>(c), prime));
    if (inv > static_cast<long long>(prime / 2)) inv -= static_cast<long long>(prime);
    return double(inv);
  }
};

ModularRank::ModularRank(std::size_t cols, std::uint64_t p, std::size_t cap)
    : cols_(cols), cap_(std::min(cap, cols)), st_(std::make_unique<State>(p)) {
  st_->freecol.resize(cols);
  for (std::size_t i = 0; i < cols; ++i) st_->freecol[i] = static_cast<std::uint32_t>(i);
  st_->live.assign(cols, 1);
}

ModularRank::~ModularRank() = default;

std::size_t ModularRank::estimate_bytes(std::size_t cols, std::size_t cap, std::size_t block_rows) {
  double c = double(cols), r = double(std::min(cap, cols));
  double core = r <= c / 2 ? r * (c - r) : c * c / 4;
  double b = double(std::min(block_rows, kBlockRows));
  double bytes = 8.0 * (core * 4.0 / 3.0 + b * c * 3 + b * r + kChunkRows * c);
  return static_cast<std::size_t>(bytes);
}

void ModularRank::add_rows(double* rows, std::size_t count) {
  State& s = *st_;
  const Reducer& red = s.red;
  for (std::size_t base = 0; base < count && rank_ < cap_; base += kBlockRows) {
    const std::size_t b = std::min(kBlockRows, count - base);
    const double* in = rows + base * cols_;
    const std::size_t q = s.q(), r = rank_;

    // Split the incoming rows into pivot and non-pivot columns.
    s.bq.assign(b * q, 0.0);
    s.bp.assign(b * r, 0.0);
    for (std::size_t i = 0; i < b; ++i) {
      const double* src = in + i * cols_;
      double* dq = &s.bq[i * q];
      for (std::size_t t = 0; t < q; ++t) dq[t] = s.live[t] ? src[s.freecol[t]] : 0.0;
      double* dp = s.bp.data() + i * r;
      for (std::size_t k = 0; k < r; ++k) dp[k] = src[s.pivcol[k]];
    }
    red.span(s.bq.data(), s.bq.size());
    red.span(s.bp.data(), s.bp.size());

    // Eliminate the known pivots: Bq -= Bp * X.
    if (r > 0 && q > 0) {
      MatMap bq(s.bq.data(), b, q, Eigen::OuterStride<>(q));
      MatMap bp(s.bp.data(), b, r, Eigen::OuterStride<>(r));
      std::size_t acc = 1, r0 = 0;
      for (std::size_t c = 0; c < s.chunks.size(); ++c) {
        const std::size_t rc = s.chunk_rows[c];
        MatMap x(s.chunks[c].data(), rc, q, Eigen::OuterStride<>(q));
        for (std::size_t i0 = 0; i0 < rc;) {
          if (acc >= s.kmax) {
            red.span(s.bq.data(), s.bq.size());
            acc = 1;
          }
          const std::size_t len = std::min(rc - i0, s.kmax - acc);
          bq.noalias() -= bp.middleCols(r0 + i0, len) * x.middleRows(i0, len);
          acc += len;
          i0 += len;
        }
        r0 += rc;
      }
      red.span(s.bq.data(), s.bq.size());
    }

    // Reduced echelon form of the remainder, new pivots among live columns.
    s.yrow.clear();
    s.newpiv.clear();
    for (std::size_t i = 0; i < b && rank_ + s.newpiv.size() < cap_; ++i) {
      double* row = &s.bq[i * q];
      const std::size_t k = s.newpiv.size();
      if (k > 0) {
        s.f.resize(k);
        for (std::size_t y = 0; y < k; ++y) s.f[y] = row[s.newpiv[y]];
        std::size_t acc = 1;
        for (std::size_t y = 0; y < k; ++y) {
          const double fy = s.f[y];
          if (fy == 0.0) continue;
          if (acc + 1 > s.kmax) {
            red.span(row, q);
            acc = 1;
          }
          const double* yr = &s.bq[s.yrow[y] * q];
          for (std::size_t t = 0; t < q; ++t) row[t] -= fy * yr[t];
          ++acc;
        }
        red.span(row, q);
      }
      std::size_t t0 = 0;
      while (t0 < q && row[t0] == 0.0) ++t0;
      if (t0 == q) continue;
      const double inv = s.centered_inverse(row[t0]);
      for (std::size_t t = 0; t < q; ++t) row[t] *= inv;
      red.span(row, q);
      row[t0] = 1.0;
      for (std::size_t y = 0; y < k; ++y) {
        double* yr = &s.bq[s.yrow[y] * q];
        const double g = yr[t0];
        if (g == 0.0) continue;
        for (std::size_t t = 0; t < q; ++t) yr[t] -= g * row[t];
        red.span(yr, q);
        yr[t0] = 0.0;
      }
      s.yrow.push_back(i);
      s.newpiv.push_back(t0);
    }
    const std::size_t k = s.newpiv.size();
    if (k == 0) continue;

    // Gather Y, then clear the new pivot columns from the stored rows.
    s.y.resize(k * q);
    for (std::size_t y = 0; y < k; ++y)
      std::copy_n(&s.bq[s.yrow[y] * q], q, &s.y[y * q]);
    if (r > 0) {
      MatMap ym(s.y.data(), k, q, Eigen::OuterStride<>(q));
      for (std::size_t c = 0; c < s.chunks.size(); ++c) {
        const std::size_t rc = s.chunk_rows[c];
        double* xd = s.chunks[c].data();
        s.xp.resize(rc * k);
        bool any = false;
        for (std::size_t i = 0; i < rc; ++i)
          for (std::size_t y = 0; y < k; ++y) {
            double v = xd[i * q + s.newpiv[y]];
            s.xp[i * k + y] = v;
            any |= v != 0.0;
          }
        if (!any) continue;
        MatMap x(xd, rc, q, Eigen::OuterStride<>(q));
        MatMap xp(s.xp.data(), rc, k, Eigen::OuterStride<>(k));
        for (std::size_t y0 = 0; y0 < k; y0 += s.kmax - 1) {
          const std::size_t len = std::min(k - y0, s.kmax - 1);
          x.noalias() -= xp.middleCols(y0, len) * ym.middleRows(y0, len);
          red.span(xd, rc * q);
        }
      }
    }

    // Append the new rows with their own pivot entries dropped.
    for (std::size_t y = 0; y < k; ++y) {
      double* yr = &s.y[y * q];
      yr[s.newpiv[y]] = 0.0;
      if (s.chunks.empty() || s.chunk_rows.back() == kChunkRows) {
        s.chunks.emplace_back();
        s.chunks.back().reserve(kChunkRows * q);
        s.chunk_rows.push_back(0);
      }
      s.chunks.back().insert(s.chunks.back().end(), yr, yr + q);
      ++s.chunk_rows.back();
      s.pivcol.push_back(s.freecol[s.newpiv[y]]);
      s.live[s.newpiv[y]] = 0;
      ++s.dead;
    }
    rank_ += k;

    // Drop dead columns once they are a quarter of the stored width.
    if (s.dead * 4 > q) {
      std::vector<std::size_t> keep;
      keep.reserve(q - s.dead);
      for (std::size_t t = 0; t < q; ++t)
        if (s.live[t]) keep.push_back(t);
      const std::size_t nq = keep.size();
      for (std::size_t c = 0; c < s.chunks.size(); ++c) {
        auto& ch = s.chunks[c];
        for (std::size_t i = 0; i < s.chunk_rows[c]; ++i)
          for (std::size_t t = 0; t < nq; ++t) ch[i * nq + t] = ch[i * q + keep[t]];
        ch.resize(s.chunk_rows[c] * nq);
        ch.shrink_to_fit();
        if (s.chunk_rows[c] < kChunkRows) ch.reserve(kChunkRows * nq);
      }
      std::vector<std::uint32_t> nf(nq);
      for (std::size_t t = 0; t < nq; ++t) nf[t] = s.freecol[keep[t]];
      s.freecol = std::move(nf);
      s.live.assign(nq, 1);
      s.dead = 0;
    }
  }
}

}  // namespace secant
