#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace secant {

using Int = boost::multiprecision::cpp_int;

// C(a, b), zero when a < 0, b < 0 or b > a.
Int binom(long a, long b);

// Number of monomials of degree j in `vars` variables; a ring in zero
// variables has only the constants.
Int monomial_count(int vars, long j);

class Partition {
 public:
  Partition() = default;
  // Sorts descending; throws std::invalid_argument on empty input or a part < 1.
  explicit Partition(std::vector<int> parts);

  // Comma-separated positive integers, e.g. "3,2,2".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int d() const { return d_; }
  int r() const { return static_cast<int>(parts_.size()); }
  int d1() const { return parts_.front(); }
  int d2() const { return part(1); }
  int s() const { return d_ - parts_.front(); }
  // Multiplicity of the largest part.
  int t() const;

  std::string str() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int d_ = 0;
};

struct Instance {
  int n = 3;
  int l = 1;
  Partition lambda;

  // Throws std::invalid_argument unless n >= 3, l >= 1, r >= 2.
  void validate() const;
  Int N() const;
};

Int dim_variety(int n, const Partition& lambda);

struct Expected {
  Int expected;
  Int epsilon;
};
Expected expected_dim(const Instance& inst);

enum class Dominance { less, greater, equal, incomparable };
const char* to_string(Dominance);

// Dominance order on prefix sums; throws if the totals differ.
Dominance partition_compare(const Partition& a, const Partition& b);

// Partitions of d with r_min..r_max parts: by part count ascending, then
// descending lexicographic on the part sequence.
std::vector<Partition> enumerate_partitions(int d, int r_min, int r_max);

struct PredictionReport;

struct SegreReport {
  std::vector<Int> factors;
  bool balanced = false;
  bool nondefective_implied = false;
};
SegreReport segre_report(int n, const Partition& lambda, int l, const PredictionReport& prediction);

}  // namespace secant
