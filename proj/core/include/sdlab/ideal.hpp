#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdlab/monomial.hpp"

namespace sdlab {

/**
 * A squarefree monomial ideal of K[x_1..x_n], held by its minimal
 * generators in canonical order. The zero ideal has no generators; the unit
 * ideal is generated by the monomial 1.
 */
class Ideal {
 public:
  explicit Ideal(int n);  // zero ideal

  /// Minimalizes `gens` (see minimalize()).
  static Ideal generated_by(int n, std::vector<Monomial> gens);
  static Ideal principal(int n, Monomial m) { return generated_by(n, {m}); }
  static Ideal unit(int n) { return principal(n, Monomial{}); }
  /// The graded maximal ideal (x_1, ..., x_n).
  static Ideal maximal(int n);

  int ambient() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
  /// Minimum generator degree; -1 for the zero ideal.
  int min_degree() const { return gens_.empty() ? -1 : gens_.front().degree(); }

  /// True iff some generator divides `m`.
  bool contains(Monomial m) const;
  /// Ideal inclusion: every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;

  bool operator==(const Ideal& other) const { return n_ == other.n_ && gens_ == other.gens_; }

 private:
  friend Ideal minimalize(int n, std::vector<Monomial> gens);
  int n_;
  std::vector<Monomial> gens_;
};

/// Divisibility antichain of `gens`, sorted canonically. Throws InputError for
/// indices outside [1, n] or n outside [1, kMaxVars].
Ideal minimalize(int n, std::vector<Monomial> gens);

/// member(I, m).
inline bool member(const Ideal& ideal, Monomial m) { return ideal.contains(m); }

/// (I : x_j).
Ideal colon_var(const Ideal& ideal, int j);

/// A ∩ B: minimalized pairwise lcms of generators.
Ideal intersect(const Ideal& a, const Ideal& b);

/// A + B.
Ideal sum(const Ideal& a, const Ideal& b);

/// Comma separated monomials, `0` for the zero ideal.
std::string to_string(const Ideal& ideal);
Ideal parse_ideal(std::string_view text, int n);

/// Characteristic of the coefficient field: 0 (rationals) or a prime.
class Field {
 public:
  constexpr Field() = default;
  /// Throws InputError unless `characteristic` is 0 or a prime below 2^31.
  explicit Field(int characteristic);

  constexpr int characteristic() const { return p_; }
  constexpr bool operator==(const Field&) const = default;

 private:
  int p_ = 0;
};

/**
 * The module I/J for squarefree monomial ideals J ⊊ I over a chosen field.
 * P_{I\J} (the squarefree monomials of I not in J) is nonempty.
 */
class QuotientPair {
 public:
  /// Validates J ⊆ I, J ≠ I and equal ambients.
  QuotientPair(Ideal numerator, Ideal denominator, Field field = Field{});

  int ambient() const { return num_.ambient(); }
  const Ideal& numerator() const { return num_; }
  const Ideal& denominator() const { return den_; }
  Field field() const { return field_; }
  QuotientPair with_field(Field f) const { return QuotientPair(num_, den_, f); }

  /// True iff m ∈ P_{I\J}.
  bool in_poset(Monomial m) const { return num_.contains(m) && !den_.contains(m); }

  /// Set when J has a minimal generator of degree ≤ the least generator
  /// degree of I. Computation is never blocked by it.
  bool normalization_warning() const { return normalization_warning_; }

 private:
  Ideal num_;
  Ideal den_;
  Field field_;
  bool normalization_warning_ = false;
};

/// I/(K ∩ I). Throws EmptyQuotientError when I ⊆ K and InputError when I is
/// zero or the ambients differ.
QuotientPair form_quotient(const Ideal& numerator, const Ideal& killed, Field field = Field{});

}  // namespace sdlab
