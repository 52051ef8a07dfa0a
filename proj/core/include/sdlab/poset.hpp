#pragma once

#include <optional>
#include <vector>

#include "sdlab/ideal.hpp"

namespace sdlab {

/// All squarefree monomials of I\J in canonical order, with a per-degree view.
struct PosetSnapshot {
  int ambient = 0;
  std::vector<Monomial> elements;
  std::vector<std::vector<Monomial>> by_degree;  // index = degree, 0..n

  std::size_t size() const { return elements.size(); }
  /// Least degree present; -1 when empty.
  int min_degree() const;
  const std::vector<Monomial>& degree(int k) const;
};

/// Enumerates P_{I\J}, optionally truncated at `max_degree`.
PosetSnapshot enumerate_poset(const QuotientPair& q, std::optional<int> max_degree = std::nullopt);

/**
 * The degree statistics the depth/Stanley-depth bounds are phrased in.
 *
 * d is the least degree of P_{I\J}; f_list are the degree-d minimal generators
 * of I (r of them) and E the remaining minimal generators. B and C are the
 * elements of P_{I\J} of degree d+1 and d+2.
 *
 * Two lcm sets are kept. W_B holds the pairwise lcms of the f_i that have
 * degree d+1 and lie in B; W_all holds every pairwise lcm. C2 = C ∩ W_all
 * (under the narrower W_B it would always be empty). C3 is the set of c ∈ C
 * whose degree-(d+1) divisors in B\E all lie in W_B.
 */
struct StrataReport {
  int d = 0;
  std::vector<Monomial> f_list;
  int r = 0;
  std::vector<Monomial> E;
  std::vector<Monomial> B;
  std::vector<Monomial> C;
  int s = 0;
  int q = 0;
  std::vector<Monomial> W_B;
  std::vector<Monomial> W_all;
  std::vector<Monomial> C2;
  std::vector<Monomial> C3;
};

StrataReport strata(const QuotientPair& q);

/// Elements of `set` divisible by x_t.
std::vector<Monomial> restrict_to_var(const std::vector<Monomial>& set, int t);

/// Elements of `set` dividing `m`.
std::vector<Monomial> divisors_in(const std::vector<Monomial>& set, Monomial m);

bool contains_sorted(const std::vector<Monomial>& sorted_set, Monomial m);

}  // namespace sdlab
