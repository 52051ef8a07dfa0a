#pragma once

#include <cstdint>
#include <vector>

#include "sdlab/ideal.hpp"

namespace sdlab {

/// Dense row-major integer matrix; the boundary maps here have entries in {-1, 0, 1}.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/**
 * Exact rank over the given field.
 *
 * Characteristic 0 uses fraction-free (Bareiss) elimination in 64-bit
 * integers and restarts in arbitrary precision on overflow. Prime
 * characteristic reduces entries mod p and eliminates there.
 */
std::size_t exact_rank(const IntMatrix& m, Field field);

}  // namespace sdlab
