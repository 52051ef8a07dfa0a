#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "sdlab/ideal.hpp"

namespace sdlab {

/// A random quotient I/J in n variables: I from 1..5 generators of degree
/// 1..3, J from multiples of them. Empty quotients are redrawn.
QuotientPair random_quotient(std::mt19937_64& rng, int n);

struct Ml1Candidate {
  QuotientPair pair;
  Monomial b;
};

/**
 * Draws an r = 2 quotient built to satisfy the C-containment hypothesis of the
 * surgery lemma: two degree-d generators, up to four degree-(d+1) extras, and
 * J generated by the offending degree-(d+2) monomials plus a few random ones.
 * Returns nullopt when the draw has no usable b (the caller redraws).
 */
std::optional<Ml1Candidate> random_ml1_candidate(std::mt19937_64& rng, int n);

}  // namespace sdlab
