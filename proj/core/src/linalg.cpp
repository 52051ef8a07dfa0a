#include "sdlab/linalg.hpp"

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdlab {

namespace {

using boost::multiprecision::cpp_int;

/// Bareiss elimination; returns nullopt when an int64 product overflows.
std::optional<std::size_t> bareiss_rank_i64(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::int64_t p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        std::int64_t x = 0;
        std::int64_t y = 0;
        std::int64_t diff = 0;
        if (__builtin_mul_overflow(at(i, j), p, &x) || __builtin_mul_overflow(at(rank, j), f, &y) ||
            __builtin_sub_overflow(x, y, &diff)) {
          return std::nullopt;
        }
        at(i, j) = diff / prev;  // exact by Sylvester's identity
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank_big(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<cpp_int> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> cpp_int& { return a[i * cols + j]; };
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const cpp_int p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const cpp_int f = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) at(i, j) = (at(i, j) * p - at(rank, j) * f) / prev;
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t modular_rank(const IntMatrix& m, std::int64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = ((m(i, j) % p) + p) % p;
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::int64_t inv = pow_mod(at(rank, col), p - 2, p);
    for (std::size_t j = col; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) at(i, j) = ((at(i, j) - f * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& m, Field field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.characteristic() != 0) return modular_rank(m, field.characteristic());
  std::vector<std::int64_t> copy(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) copy[i * m.cols() + j] = m(i, j);
  }
  if (auto r = bareiss_rank_i64(std::move(copy), m.rows(), m.cols())) return *r;
  return bareiss_rank_big(m);
}

}  // namespace sdlab
