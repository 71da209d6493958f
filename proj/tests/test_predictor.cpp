#include "secant/predictor.hpp"
#include "secant/series.hpp"

#include <doctest.h>

#include <random>

using namespace secant;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
Instance I(int n, int l, std::vector<int> parts) { return Instance{n, l, P(std::move(parts))}; }
}  // namespace

TEST_CASE("a_j coefficients") {
  auto inst = I(4, 3, {3, 2, 2});
  CHECK(a_coeff(inst, 0) == 1);
  CHECK(a_coeff(inst, 4) == 32);
  CHECK(a_coeff(inst, 7) == 6);
  CHECK_THROWS(a_coeff(inst, 8));
  CHECK_THROWS(a_coeff(inst, -1));
  for (int n = 3; n <= 6; ++n)
    for (int l = 2; l <= 5; ++l)
      for (auto& lam : enumerate_partitions(7, 2, 4)) {
        Instance in{n, l, lam};
        REQUIRE(a_coeff(in, lam.s()) == binom(lam.s() + n - 1, n - 1) - lam.t() * l);
      }
}

TEST_CASE("a_j match the plus truncated series until the first nonpositive one") {
  for (int n = 3; n <= 6; ++n)
    for (int l = 2; l <= 5; ++l)
      for (int d = 2; d <= 8; ++d)
        for (auto& lam : enumerate_partitions(d, 2, 4)) {
          Instance in{n, l, lam};
          auto rep = predict(in);
          auto h = predicted_hilbert(n, l, lam, d);
          for (int j = 0; j <= d; ++j) {
            if (rep.first_nonpositive && j >= *rep.first_nonpositive) break;
            REQUIRE(rep.a_seq[j] == h[j]);
          }
          for (int j = 0; j < lam.s(); ++j) REQUIRE(rep.a_seq[j] > 0);
        }
}

TEST_CASE("worked predictions") {
  auto wlp = predict(I(4, 3, {3, 2, 2}));
  CHECK_FALSE(wlp.fills);
  CHECK(wlp.predicted == 113);
  CHECK(wlp.defect == 0);
  CHECK(wlp.status == Status::conjectural);

  auto fill = predict(I(4, 2, {2, 1}));
  CHECK(fill.fills);
  CHECK(fill.predicted == 19);
  CHECK(fill.status == Status::proven);

  auto hyp = predict(I(3, 2, {9, 7, 2}));
  CHECK_FALSE(hyp.fills);
  CHECK(hyp.predicted == 188);
  CHECK(hyp.defect == 1);
  CHECK(hyp.status == Status::proven);
}

TEST_CASE("the [d-1,1] erratum is flagged") {
  auto rep = predict(I(5, 3, {4, 1}));
  REQUIRE_FALSE(rep.errata.empty());
  CHECK(rep.errata.front().find("C(d+n-2,n-1)+n-2") != std::string::npos);
}

TEST_CASE("prediction invariants over a grid") {
  for (int n = 3; n <= 8; ++n)
    for (int l = 2; l <= 6; ++l)
      for (int d = 2; d <= 9; ++d)
        for (auto& lam : enumerate_partitions(d, 2, 5)) {
          Instance in{n, l, lam};
          auto rep = predict(in);
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(lam.str());
          REQUIRE(rep.defect >= 0);
          REQUIRE(rep.defect == rep.expected - rep.predicted);
          if (rep.fills) REQUIRE(rep.predicted == rep.N - 1);
          else {
            REQUIRE(rep.predicted == rep.N - 1 - rep.a_seq[d]);
            REQUIRE(rep.predicted == nonfilling_dim_formula(in));
          }
          bool some_nonpositive = false;
          for (int j = lam.s(); j <= d; ++j) some_nonpositive = some_nonpositive || rep.a_seq[j] <= 0;
          REQUIRE(rep.fills == some_nonpositive);
          REQUIRE(rep.overly_fills == (rep.fills && rep.N - 1 < Int(l) * rep.dimX + l - 1));
          if (2 * l <= n && lam.r() >= 3 && lam.d1() < lam.s() && !rep.fills)
            REQUIRE(rep.predicted == Int(l) * rep.dimX + l - 1);
        }
}

TEST_CASE("r = 2 defects in the proper range") {
  for (int n = 4; n <= 10; ++n)
    for (int l = 2; 2 * l <= n; ++l)
      for (int d = 2; d <= 8; ++d)
        for (auto& lam : enumerate_partitions(d, 2, 2)) {
          auto rep = predict(Instance{n, l, lam});
          if (rep.fills) continue;
          Int expect = lam.d1() == lam.part(1)
                           ? Int(2 * l * (l - 1)) - rep.epsilon
                           : Int(l * (l - 1)) - rep.epsilon + syz_dim(n, l, lam.s(), d);
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(lam.str());
          REQUIRE(rep.defect == expect);
        }
}

TEST_CASE("syzygy dimension") {
  CHECK(syz_dim(6, 2, 2, 5) == 6);
  CHECK(syz_dim(3, 2, 9, 18) == 1);
  for (int d = 2; d < 10; ++d) CHECK(syz_dim(5, 3, 5, d) == 0);
}

TEST_CASE("Gould identity") {
  CHECK(gould_sum(4, 3, 1, 4) == 0);
  CHECK(binom(6, 2) - 4 * binom(5, 2) + 6 * binom(4, 2) - 4 * binom(3, 2) + binom(2, 2) == 0);
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 200) {
    int n = std::uniform_int_distribution<int>(3, 10)(rng);
    int l = std::uniform_int_distribution<int>(n, n + 8)(rng);
    int s = std::uniform_int_distribution<int>(1, 5)(rng);
    int d = std::uniform_int_distribution<int>(1, 80)(rng);
    if (d - l * s + n - 1 < 0) continue;
    REQUIRE(gould_sum(l, n, s, d) == 0);
    ++checked;
  }
}

TEST_CASE("secant lines in the plane") {
  auto hyp = n3_secant_line(P({9, 7, 2}));
  CHECK(hyp.classification == LineClass::defective);
  CHECK(hyp.defect == 1);
  for (int d1 = 3; d1 <= 12; ++d1) CHECK(n3_secant_line(P({d1, 3, 3})).classification == LineClass::fills);
  auto ex = n3_secant_line(P({2, 2, 2, 1}));
  CHECK(ex.dim == 35);
  CHECK(n3_secant_line(P({4, 3})).classification == LineClass::fills);
  for (int d = 2; d <= 12; ++d)
    for (auto& lam : enumerate_partitions(d, 2, d)) {
      auto line = n3_secant_line(lam);
      auto rep = predict(Instance{3, 2, lam});
      CAPTURE(lam.str());
      REQUIRE(line.dim == rep.predicted);
      if (line.classification == LineClass::defective) {
        Int p = 0;
        for (int i = 1; i < lam.r(); ++i)
          for (int j = i + 1; j < lam.r(); ++j) p += lam.part(i) * lam.part(j);
        Int cap = binom(lam.d1() - lam.s() + 2, 2);
        Int other = 2 * p - 3 * lam.s();
        REQUIRE(line.defect == (cap < other ? cap : other));
      }
    }
}

TEST_CASE("threshold scans") {
  for (int n = 3; n <= 9; ++n) CHECK(threshold_l0(Family::balanced, n, 2) == (n + 1) / 2);
  CHECK(threshold_l0(Family::linear_factor, 5, 5) == 3);
  CHECK(threshold_l0(Family::linear_factor, 6, 3) == 4);
  for (int n = 3; n <= 10; ++n)
    for (int d = 3; d <= 10; ++d) CHECK(threshold_l0(Family::linear_factor, n, d) <= n - 1);
  CHECK_THROWS_AS(threshold_l0(Family::balanced, 4, 5), std::invalid_argument);
  CHECK(parse_family("balanced") == Family::balanced);
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
}

TEST_CASE("linear factor family") {
  auto a = linear_factor_predict(6, 3, 3);
  CHECK(a.predicted == 54);
  CHECK_FALSE(a.fills);
  auto b = linear_factor_predict(5, 3, 5);
  CHECK(b.fills);
  CHECK(b.predicted == 125);
  for (int n = 3; n <= 8; ++n) {
    CHECK(linear_factor_predict(n, n, 4).fills);
    for (int l = 2; l <= 6; ++l)
      for (int d = 3; d <= 8; ++d) {
        auto lf = linear_factor_predict(n, l, d);
        auto gen = predict(Instance{n, l, P({d - 1, 1})});
        CAPTURE(n);
        CAPTURE(l);
        CAPTURE(d);
        REQUIRE(lf.predicted == gen.predicted);
        REQUIRE(lf.fills == gen.fills);
      }
  }
}

TEST_CASE("reducible forms") {
  auto a = reducible_forms_predict(6, 3, 3);
  CHECK(a.predicted == 54);
  CHECK(a.defect > 0);
  for (int d = 2; d <= 8; ++d) CHECK(reducible_forms_predict(5, 4, d).fills);
  for (int n = 6; n <= 12; n += 2) CHECK(reducible_forms_predict(n, n / 2, 2).fills);
}

TEST_CASE("hook implication test") {
  auto res = hook_implication_check(3, 2, P({9, 7, 2}));
  CHECK(res.g == 1);
  CHECK(res.implication_holds);
  CHECK_THROWS_AS(hook_implication_check(3, 2, P({2, 2, 2})), std::invalid_argument);
}
