#include "reflift/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace reflift {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer elimination overflow (add)");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer elimination overflow (mul)");
  return out;
}

namespace {

// col_dst[from..) -= q * col_src[from..)
void axpy(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t from, std::size_t len) {
  for (std::size_t r = from; r < len; ++r) {
    if (src[r] != 0) dst[r] = checked_add(dst[r], -checked_mul(q, src[r]));
  }
}

}  // namespace

IntegerSystem::IntegerSystem(std::size_t rows, std::size_t cols, std::span<const std::int64_t> row_major)
    : rows_(rows), cols_(cols), lower_(rows * cols), unimod_(cols * cols, 0) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("IntegerSystem: coefficient count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) l_at(r, c) = row_major[r * cols + c];
  }
  for (std::size_t c = 0; c < cols; ++c) unimod_[c * cols + c] = 1;

  auto lcol = [&](std::size_t c) { return lower_.data() + c * rows_; };
  auto ucol = [&](std::size_t c) { return unimod_.data() + c * cols_; };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    std::swap_ranges(lcol(a), lcol(a) + rows_, lcol(b));
    std::swap_ranges(ucol(a), ucol(a) + cols_, ucol(b));
  };

  std::size_t k = 0;
  for (std::size_t i = 0; i < rows_ && k < cols_; ++i) {
    while (true) {
      std::size_t best = cols_;
      for (std::size_t c = k; c < cols_; ++c) {
        const auto v = l_at(i, c);
        if (v != 0 && (best == cols_ || std::abs(v) < std::abs(l_at(i, best)))) best = c;
      }
      if (best == cols_) break;  // row i already expressed by earlier pivots
      if (best != k) swap_cols(best, k);
      bool reduced = true;
      const auto pivot = l_at(i, k);
      for (std::size_t c = k + 1; c < cols_; ++c) {
        const auto v = l_at(i, c);
        if (v == 0) continue;
        const auto q = v / pivot;
        axpy(lcol(c), lcol(k), q, i, rows_);
        axpy(ucol(c), ucol(k), q, 0, cols_);
        if (l_at(i, c) != 0) reduced = false;
      }
      if (!reduced) continue;
      if (l_at(i, k) < 0) {
        for (std::size_t r = i; r < rows_; ++r) l_at(r, k) = -l_at(r, k);
        for (std::size_t r = 0; r < cols_; ++r) ucol(k)[r] = -ucol(k)[r];
      }
      pivots_.push_back({i, k});
      ++k;
      break;
    }
  }
}

std::optional<std::vector<std::int64_t>> IntegerSystem::solve(std::span<const std::int64_t> b) const {
  if (b.size() != rows_) throw std::invalid_argument("IntegerSystem::solve: right-hand side has wrong length");
  std::vector<std::int64_t> y(cols_, 0);
  std::size_t p = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < p; ++c) {
      const auto v = l_at(i, c);
      if (v != 0 && y[c] != 0) s = checked_add(s, checked_mul(v, y[c]));
    }
    const auto rem = checked_add(b[i], -s);
    if (p < pivots_.size() && pivots_[p].row == i) {
      const auto piv = l_at(i, p);
      if (rem % piv != 0) return std::nullopt;
      y[p] = rem / piv;
      ++p;
    } else if (rem != 0) {
      return std::nullopt;
    }
  }
  std::vector<std::int64_t> x(cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (y[c] == 0) continue;
    const auto* u = unimod_.data() + c * cols_;
    for (std::size_t r = 0; r < cols_; ++r) {
      if (u[r] != 0) x[r] = checked_add(x[r], checked_mul(u[r], y[c]));
    }
  }
  return x;
}

}  // namespace reflift
