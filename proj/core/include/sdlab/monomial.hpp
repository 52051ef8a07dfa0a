#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sdlab {

using VarMask = std::uint32_t;

/// Upper limit on the number of variables of the ambient polynomial ring.
inline constexpr int kMaxVars = 16;

/**
 * A squarefree monomial, stored as the set of its variables.
 *
 * Variables are 1-indexed: x_k occupies bit k-1 of the mask. The empty set is
 * the monomial 1. Ordering is canonical: by degree, then lexicographically on
 * the sorted index lists (x1*x2 < x1*x3 < x2*x3).
 */
class Monomial {
 public:
  constexpr Monomial() = default;

  static constexpr Monomial from_mask(VarMask mask) { return Monomial(mask); }
  static Monomial from_vars(std::initializer_list<int> vars);
  static Monomial from_vars(const std::vector<int>& vars);
  static constexpr Monomial variable(int k) { return Monomial(VarMask{1} << (k - 1)); }

  constexpr VarMask mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool is_one() const { return mask_ == 0; }
  constexpr bool contains(int k) const { return (mask_ >> (k - 1)) & 1U; }
  /// Highest variable index occurring, 0 for the unit.
  constexpr int max_var() const { return 32 - std::countl_zero(mask_); }

  constexpr bool divides(Monomial other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Monomial lcm(Monomial other) const { return Monomial(mask_ | other.mask_); }
  constexpr Monomial gcd(Monomial other) const { return Monomial(mask_ & other.mask_); }
  constexpr Monomial times(int k) const { return Monomial(mask_ | (VarMask{1} << (k - 1))); }
  constexpr Monomial without(int k) const { return Monomial(mask_ & ~(VarMask{1} << (k - 1))); }
  /// Quotient by a divisor; the caller guarantees `d` divides this monomial.
  constexpr Monomial divided_by(Monomial d) const { return Monomial(mask_ & ~d.mask_); }

  std::vector<int> vars() const;

  constexpr bool operator==(const Monomial&) const = default;
  constexpr std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    if (mask_ == other.mask_) return std::strong_ordering::equal;
    const VarMask diff = mask_ ^ other.mask_;
    const VarMask lowest = diff & (~diff + 1);
    return (mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  constexpr explicit Monomial(VarMask mask) : mask_(mask) {}
  VarMask mask_ = 0;
};

/// Renders `x1*x3`, or `1` for the unit.
std::string to_string(Monomial m);

/// Parses `x<k>` factors joined by `*`, or `1`. Throws InputError on bad
/// syntax, repeated variables or indices outside [1, n].
Monomial parse_monomial(std::string_view text, int n);

/// Throws InputError unless all variables of `m` lie in [1, n].
void check_ambient(Monomial m, int n);

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept { return m.mask(); }
};

}  // namespace sdlab
