#include "secant/forms.hpp"
#include "secant/oracle.hpp"
#include "secant/rank.hpp"

#include <doctest.h>

#include <random>

using namespace secant;

namespace {

constexpr std::uint64_t kP = 1'000'003;

// Plain row reduction over Z/p, the reference for ModularRank.
std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = inv_mod(m[rank][c], p);
    for (auto& v : m[rank]) v = v * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + (p - f) * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

// Random rows * cols matrix of rank at most `target`, entries in [0, p).
std::vector<std::vector<std::uint64_t>> low_rank(std::size_t rows, std::size_t cols, std::size_t target,
                                                 std::uint64_t p, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(target)),
      b(target, std::vector<std::uint64_t>(cols));
  for (auto& row : a)
    for (auto& v : row) v = u(rng);
  for (auto& row : b)
    for (auto& v : row) v = u(rng) % 3 == 0 ? 0 : u(rng);
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < target; ++k)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + a[i][k] * b[k][j]) % p;
  return m;
}

std::size_t engine_rank(const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p, std::size_t chunk,
                        std::size_t cap = SIZE_MAX) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  ModularRank mr(cols, p, cap);
  std::vector<double> buf;
  for (std::size_t i = 0; i < m.size(); i += chunk) {
    std::size_t cnt = std::min(chunk, m.size() - i);
    buf.assign(cnt * cols, 0);
    for (std::size_t r = 0; r < cnt; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        auto v = static_cast<std::int64_t>(m[i + r][c]);
        if (v > static_cast<std::int64_t>(p / 2)) v -= static_cast<std::int64_t>(p);
        buf[r * cols + c] = static_cast<double>(v);
      }
    mr.add_rows(buf.data(), cnt);
  }
  return mr.rank();
}

}  // namespace

TEST_CASE("monomial index is a bijection in graded colex order") {
  for (int n = 1; n <= 6; ++n)
    for (int e = 0; e <= 7; ++e) {
      const auto& idx = MonomialIndex::get(n, e);
      REQUIRE(idx.size() == static_cast<std::size_t>(monomial_count(n, e)));
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto* ex = idx.exponents(i);
        int total = 0;
        for (int v = 0; v < n; ++v) total += ex[v];
        REQUIRE(total == e);
        REQUIRE(idx.rank(ex) == i);
      }
    }
  // colex in 2 variables of degree 2: x2^2, x1 x2, x1^2
  const auto& two = MonomialIndex::get(2, 2);
  CHECK(two.exponents(0)[1] == 2);
  CHECK(two.exponents(1)[0] == 1);
  CHECK(two.exponents(2)[0] == 2);
}

TEST_CASE("rank of a product of monomials") {
  const auto& a = MonomialIndex::get(4, 2);
  const auto& b = MonomialIndex::get(4, 3);
  const auto& ab = MonomialIndex::get(4, 5);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint8_t sum[4];
      for (int v = 0; v < 4; ++v) sum[v] = a.exponents(i)[v] + b.exponents(j)[v];
      REQUIRE(ab.rank_of_sum(a.exponents(i), b.exponents(j)) == ab.rank(sum));
    }
}

TEST_CASE("random forms") {
  Rng r1(5), r2(5);
  auto f = random_form(3, 0, kP, r1);
  CHECK(f.coeffs.size() == 1);
  auto g = random_form(3, 2, kP, r1);
  CHECK(g.coeffs.size() == 6);
  CHECK(random_form(3, 0, kP, r2) == f);
  CHECK(random_form(3, 2, kP, r2) == g);
  for (auto c : g.coeffs) CHECK(c < kP);
}

TEST_CASE("form multiplication") {
  Rng rng(11);
  auto f = random_form(3, 3, kP, rng);
  CHECK(multiply(f, HomogeneousForm::constant(3, 1), kP) == f);
  auto x1 = HomogeneousForm::monomial(3, {1, 0, 0});
  auto x2 = HomogeneousForm::monomial(3, {0, 1, 0});
  CHECK(multiply(x1, x2, kP) == HomogeneousForm::monomial(3, {1, 1, 0}));
  auto s = add(x1, x2, kP);
  auto sq = multiply(s, s, kP);
  auto expect = add(add(HomogeneousForm::monomial(3, {2, 0, 0}), HomogeneousForm::monomial(3, {0, 2, 0}), kP),
                    add(HomogeneousForm::monomial(3, {1, 1, 0}), HomogeneousForm::monomial(3, {1, 1, 0}), kP), kP);
  CHECK(sq == expect);
  auto g = random_form(3, 2, kP, rng);
  auto h = random_form(3, 4, kP, rng);
  CHECK(multiply(f, multiply(g, h, kP), kP) == multiply(multiply(f, g, kP), h, kP));
  CHECK(multiply(f, g, kP) == multiply(g, f, kP));
}

TEST_CASE("tangent generators") {
  Rng rng(3);
  auto f1 = random_form(4, 3, kP, rng);
  auto f2 = random_form(4, 2, kP, rng);
  auto two = tangent_generators({f1, f2}, kP);
  CHECK(two[0] == f2);
  CHECK(two[1] == f1);
  auto f3 = random_form(4, 2, kP, rng);
  auto three = tangent_generators({f1, f2, f3}, kP);
  CHECK(three[0].degree == 4);
  CHECK(three[1].degree == 5);
  CHECK(three[2].degree == 5);
  CHECK(three[1] == multiply(f1, f3, kP));
  auto x = [](int i) {
    std::vector<int> e(3, 0);
    e[static_cast<std::size_t>(i)] = 1;
    return HomogeneousForm::monomial(3, e);
  };
  auto lines = tangent_generators({x(0), x(1), x(2)}, kP);
  CHECK(lines[0] == HomogeneousForm::monomial(3, {0, 1, 1}));
  CHECK(lines[1] == HomogeneousForm::monomial(3, {1, 0, 1}));
  CHECK(lines[2] == HomogeneousForm::monomial(3, {1, 1, 0}));
}

TEST_CASE("modular rank agrees with plain elimination") {
  Rng rng(99);
  for (std::uint64_t p : {std::uint64_t{3}, std::uint64_t{7}, std::uint64_t{101}, kP, std::uint64_t{67108859}}) {
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t rows = 1 + rng() % 300, cols = 1 + rng() % 300;
      std::size_t target = rng() % (std::min(rows, cols) + 1);
      auto m = low_rank(rows, cols, target, p, rng);
      std::size_t want = naive_rank(m, p);
      CAPTURE(p);
      CAPTURE(rows);
      CAPTURE(cols);
      REQUIRE(engine_rank(m, p, 1000) == want);
      REQUIRE(engine_rank(m, p, 17) == want);
      REQUIRE(engine_rank(m, p, 1) == want);
    }
  }
}

TEST_CASE("modular rank cap stops at the cap") {
  Rng rng(1);
  auto m = low_rank(200, 150, 150, kP, rng);
  CHECK(engine_rank(m, kP, 50, 90) >= 90);
  CHECK(engine_rank(m, kP, 50, 90) <= 150);
}

TEST_CASE("modular rank on wide sparse rows") {
  // identity blocks shifted: exercises dead column compaction
  const std::size_t cols = 4000;
  ModularRank mr(cols, kP, SIZE_MAX);
  std::vector<double> buf(256 * cols);
  for (std::size_t b = 0; b < 10; ++b) {
    std::fill(buf.begin(), buf.end(), 0.0);
    for (std::size_t r = 0; r < 256; ++r) {
      buf[r * cols + (b * 256 + r) % cols] = 1;
      buf[r * cols + (b * 256 + r + 7) % cols] = -3;
    }
    mr.add_rows(buf.data(), 256);
  }
  // rows e_i - 3 e_{i+7} for i < 2560 are independent
  CHECK(mr.rank() == 2560);
}

TEST_CASE("graded piece ranks") {
  PrimeFieldConfig cfg;
  Rng rng(2);
  auto g = random_form(4, 3, cfg.p, rng);
  for (int j = 3; j <= 7; ++j) CHECK(ideal_piece_rank({g}, j, cfg) == static_cast<std::size_t>(monomial_count(4, j - 3)));
  auto l1 = random_form(3, 1, cfg.p, rng);
  auto l2 = random_form(3, 1, cfg.p, rng);
  CHECK(ideal_piece_rank({l1, l2}, 2, cfg) == 5);
  CHECK(ideal_piece_rank({g}, 2, cfg) == 0);
  PrimeFieldConfig tight = cfg;
  tight.max_columns = 10;
  CHECK_THROWS_AS(ideal_piece_rank({g}, 7, tight), ResourceGuardError);
}

TEST_CASE("field helpers") {
  CHECK(is_prime(1'000'003));
  CHECK_FALSE(is_prime(1'000'001));
  CHECK(inv_mod(3, 7) == 5);
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  PrimeFieldConfig bad;
  bad.p = 1'000'001;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.p = 1ULL << 27;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  PrimeFieldConfig zero;
  zero.trials = 0;
  CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
}
