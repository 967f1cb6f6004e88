#pragma once

// Exact integer solving of A x = b by column-style Hermite elimination.
//
// The matrix is factored once as A U = L with U unimodular and L in column
// echelon form; solve(b) then runs a forward substitution on L and maps back
// through U, so many right-hand sides share one factorisation.  Arithmetic is
// 64-bit with overflow checks; overflow raises std::overflow_error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace reflift {

class IntegerSystem {
 public:
  /// Row-major rows x cols coefficients.
  IntegerSystem(std::size_t rows, std::size_t cols, std::span<const std::int64_t> row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Some integer x with A x = b, or nullopt when none exists.  Free
  /// coordinates of the echelon form are set to zero, so b = 0 gives x = 0.
  std::optional<std::vector<std::int64_t>> solve(std::span<const std::int64_t> b) const;

 private:
  struct Pivot {
    std::size_t row;
    std::size_t col;
  };

  std::int64_t& l_at(std::size_t r, std::size_t c) { return lower_[c * rows_ + r]; }
  std::int64_t l_at(std::size_t r, std::size_t c) const { return lower_[c * rows_ + r]; }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> lower_;  // column-major L
  std::vector<std::int64_t> unimod_; // column-major U (cols x cols)
  std::vector<Pivot> pivots_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace reflift
