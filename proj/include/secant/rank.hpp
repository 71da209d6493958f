#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace secant {

// Incremental rank of a row set over Z/p, p < 2^26.
//
// Keeps the row space in reduced echelon form as [I | X] up to a column
// permutation and stores only X (pivot rows by non-pivot columns). Residues
// are centered doubles, so block products run through dense GEMM and stay
// exact as long as each dot product is reduced before 2^53.
class ModularRank {
 public:
  ModularRank(std::size_t cols, std::uint64_t p, std::size_t cap);
  ~ModularRank();
  ModularRank(const ModularRank&) = delete;
  ModularRank& operator=(const ModularRank&) = delete;

  // `rows` holds `count` dense rows of length cols() with entries in (-p, p).
  // The buffer is clobbered.
  void add_rows(double* rows, std::size_t count);

  std::size_t rank() const { return rank_; }
  std::size_t cols() const { return cols_; }
  bool saturated() const { return rank_ >= cap_; }

  // Upper estimate of peak working memory for the given shape.
  static std::size_t estimate_bytes(std::size_t cols, std::size_t cap, std::size_t block_rows);

 private:
  struct State;
  std::size_t cols_;
  std::size_t cap_;
  std::size_t rank_ = 0;
  std::unique_ptr<State> st_;
};

}  // namespace secant
