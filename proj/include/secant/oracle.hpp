#pragma once

#include "secant/combinatorics.hpp"
#include "secant/field.hpp"
#include "secant/forms.hpp"
#include "secant/series.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace secant {

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank over Z/p of the degree-j piece of the ideal spanned by the generators.
// Stops early once the rank reaches `cap`.
std::size_t ideal_piece_rank(const std::vector<HomogeneousForm>& generators, int j,
                             const PrimeFieldConfig& cfg, std::size_t cap = SIZE_MAX);

struct OracleRun {
  Instance inst;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> trial_ranks;  // rank at degree d, per trial
  std::size_t max_rank = 0;
  std::size_t columns = 0;  // C(d+n-1, n-1)
  long long secant_dim = -1;
  std::size_t codim = 0;
  bool linear_reduced = false;
  std::optional<std::vector<std::size_t>> hilbert;  // dim [A]_j, j = 0..d
};

// Terracini rank at l random points of the variety, maximized over trials.
OracleRun oracle_run(const Instance& inst, const PrimeFieldConfig& cfg, bool want_hilbert);

struct LadderStep {
  int i = 0;
  int vars = 0;
  std::vector<std::size_t> oracle;
  TruncatedSeries expected;
  bool match = false;
};

struct WlpResult {
  int k = 0;
  bool pass = true;
  std::vector<LadderStep> ladder;
};

// Hilbert functions of the construction in a given number of variables are
// shared by every cell with the same (l, lambda); memoize them across calls.
class LadderCache {
 public:
  using Key = std::tuple<int, std::string, int, std::uint64_t, std::uint64_t, int>;
  std::optional<std::vector<std::size_t>> find(const Key& key) const;
  void store(const Key& key, std::vector<std::size_t> hilbert);

 private:
  mutable std::mutex mu_;
  std::map<Key, std::vector<std::size_t>> map_;
};

// Compares the oracle Hilbert function in 2l - i variables, i = 0..max(0, 2l - n),
// with |(1 - t)^i numerator^l / (1 - t)^{2l}|^+ through degree d.
WlpResult wlp_consequence_check(const Instance& inst, const PrimeFieldConfig& cfg,
                                LadderCache* cache = nullptr);

struct FroebergResult {
  std::vector<std::size_t> hilbert;
  TruncatedSeries predicted;
  bool froeberg_match = false;
  bool recursive_agrees = false;
};

// l general forms of degree k and l of degree d - k in n variables.
FroebergResult froeberg_oracle_r2(int n, int l, int k, int d, const PrimeFieldConfig& cfg);

}  // namespace secant
