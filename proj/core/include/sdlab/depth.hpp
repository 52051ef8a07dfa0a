#pragma once

#include <limits>
#include <vector>

#include "sdlab/ideal.hpp"

namespace sdlab {

/// Homology dimensions h_0..h_n of the Koszul complex K(x_1..x_n; I/J) in one multidegree.
struct KoszulDegreeReport {
  Monomial degree;  // support of the multidegree
  std::vector<int> betti;
};

/**
 * Koszul homology of I/J in the squarefree multidegree `a`.
 *
 * Term i has basis e_F for F ⊆ a, |F| = i, with x^{a\F} ∈ P_{I\J}. The
 * differential is ∂(e_F) = Σ_{j∈F} (-1)^{pos(j,F)} e_{F\{j}}, pos being the
 * 0-based rank of j in F; a summand vanishes when x_j·x^{a\F} falls into J.
 */
KoszulDegreeReport koszul_component(const QuotientPair& q, Monomial a);

/// Same for an arbitrary multidegree with exponents ≤ 2: `twice` marks the
/// variables of `a` that carry exponent 2.
KoszulDegreeReport koszul_component(const QuotientPair& q, Monomial a, Monomial twice);

struct DepthResult {
  int depth = 0;
  int pd = 0;
  Monomial witness_degree;  // canonical-least multidegree with h_pd ≠ 0
  int witness_index = 0;    // = pd
  Field field;
};

struct DepthOptions {
  /// Also scan every multidegree with exponents ≤ 2 and check that nothing
  /// outside the squarefree degrees contributes.
  bool paranoid = false;
};

/**
 * depth(I/J) = n - max{i : H_i(x; I/J)_a ≠ 0}.
 *
 * I/J is a squarefree module, so its multigraded Betti numbers live in
 * squarefree degrees and only those are scanned (see DepthOptions::paranoid).
 */
DepthResult depth(const QuotientPair& q, const DepthOptions& options = {});

/// Depth value used for the zero module in exact-sequence checks.
inline constexpr int kInfiniteDepth = std::numeric_limits<int>::max() / 4;

/// depth(I/J), or kInfiniteDepth when J ⊇ I.
int module_depth(const Ideal& numerator, const Ideal& denominator, Field field);

/**
 * depth(S/I) from the Stanley–Reisner complex Δ of I, via local cohomology:
 * depth = min over faces σ of |σ| + 1 + min{j : H̃_j(lk σ) ≠ 0}.
 * Throws InputError when I is zero or the unit ideal.
 */
int reisner_depth_oracle(const Ideal& ideal, Field field);

/// pd(S/I) from reduced homology of restrictions: max{i : H̃_{|W|-i-1}(Δ_W) ≠ 0}.
int hochster_projective_dimension(const Ideal& ideal, Field field);

/// Reduced homology dimensions H̃_{-1}..H̃_{dim} of a simplicial complex given by
/// all of its faces (closed under subsets, the empty face included). Entry j+1
/// holds H̃_j. An empty list (the void complex) yields an empty vector.
std::vector<int> reduced_homology(const std::vector<Monomial>& faces, Field field);

}  // namespace sdlab
