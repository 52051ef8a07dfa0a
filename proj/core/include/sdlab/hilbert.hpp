#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdlab/ideal.hpp"

namespace sdlab {

using BigInt = boost::multiprecision::cpp_int;

/// H(t) = K(t) / (1-t)^n with K stored constant term first.
struct HilbertSeries {
  std::vector<std::int64_t> k_poly;
  int denom_exp = 0;

  bool operator==(const HilbertSeries&) const = default;
};

/// Formal direct sum. Throws InputError when the denominator exponents differ.
HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);

/// K(t) = Σ_{u ∈ P_{I\J}} t^{deg u} (1-t)^{n - deg u}.
HilbertSeries hilbert_series(const QuotientPair& q);

/// Series of the free module S(-shift) over n variables.
HilbertSeries free_module_series(int n, int shift = 0);

/// First `count` coefficients of (1-t)^p · H(t), exact.
std::vector<BigInt> scaled_expansion(const HilbertSeries& h, int p, std::size_t count);

struct HdepthResult {
  int value = 0;
  /// For value+1 (absent when value = n): first index with a negative
  /// coefficient in (1-t)^{value+1}·H, and that coefficient.
  std::optional<std::size_t> failing_index;
  std::optional<BigInt> failing_coefficient;
};

/**
 * hdepth_1: the largest p ≤ n with (1-t)^p·H(t) coefficientwise nonnegative.
 *
 * (1-t)^p·H = K/(1-t)^m with m = n - p. Past deg K its coefficients follow a
 * polynomial of degree m-1; positivity is decided by checking every
 * coefficient up to a root bound of that polynomial, beyond which its sign is
 * the sign of the leading coefficient.
 */
HdepthResult hdepth1(const HilbertSeries& h);

struct HerzogComparison {
  int n = 0;
  int hdepth_maximal = 0;         // hdepth_1(m)
  int hdepth_free_plus_maximal = 0;  // hdepth_1(S ⊕ m)
  bool equal = false;
};

/// Compares hdepth_1(m) with hdepth_1(S ⊕ m) for 1 ≤ n ≤ 12.
HerzogComparison herzog_question(int n);

}  // namespace sdlab
