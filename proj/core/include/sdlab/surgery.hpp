#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdlab/errors.hpp"
#include "sdlab/poset.hpp"
#include "sdlab/sdepth.hpp"

namespace sdlab {

/// A rewrite that does not replace a set of intervals by a partition of the same set.
class RotationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The degree-d generator dividing b. Throws PreconditionError unless exactly one does.
Monomial designated_generator(const QuotientPair& q, Monomial b);

/**
 * I_b/J_b with I_b = (f_2, ..., f_r, B \ {b}) and J_b = J ∩ I_b, where f_1 is
 * the unique degree-d generator dividing b. Throws InputError when b ∉ B and
 * PreconditionError when I_b is zero or contained in J.
 */
QuotientPair build_reduced_pair(const QuotientPair& q, Monomial b);

/// [f_k, c'_k] in P_b with its two degree-(d+1) members.
struct GeneratorInterval {
  Monomial f;
  Monomial top;
  Monomial middle[2];
};

/**
 * The injection h of a normalized partition P_b of I_b/J_b:
 * f_k ↦ c'_k and b' ↦ c_{b'} for b' ∈ B outside the generator intervals.
 */
struct HMap {
  int d = 0;
  Monomial b;
  Monomial f1;
  std::vector<Monomial> B;                          // degree d+1 stratum of I/J
  std::vector<GeneratorInterval> generators;        // f_2..f_r
  std::vector<std::pair<Monomial, Monomial>> map;   // domain ↦ image, canonical order
  std::vector<Monomial> excluded;                   // b and every generator-interval middle
  Partition partition;                              // the normalized P_b

  std::optional<Monomial> operator()(Monomial x) const;
  bool is_excluded(Monomial x) const;
  std::vector<Monomial> image() const;
  /// Top of the P_b interval containing x.
  Monomial top_of(Monomial x) const;
  /// B-elements with their own interval (the B-part of the domain).
  std::vector<Monomial> path_nodes() const;
};

/**
 * Builds h from a partition of I_b/J_b with sdepth ≥ d+2. The partition is
 * first normalized so intervals starting in degree d or d+1 end in C.
 * Throws PreconditionError if it does not verify or its value is below d+2,
 * InvariantError if the resulting h is not injective of size s - r.
 */
HMap build_h(const QuotientPair& q, Monomial b, const Partition& pb);

struct Path {
  std::vector<Monomial> nodes;
  bool weak = false;
  bool bad = false;
  bool maximal = false;
};

struct PathReport {
  std::vector<Path> paths;           // every maximal path from the start
  std::vector<Monomial> reachable;   // T: ends of all paths from the start
  bool any_weak = false;
  bool any_bad = false;
};

/**
 * Paths a_1 = start, ..., a_k through B minus the excluded set, with
 * a_{l+1} | h(a_l) and h(a_l) ∉ (b) for l < k. A path is weak when some
 * h(a_j) lies in the ideal of the generator-interval middles, bad when
 * h(a_k) ∈ (b). Throws BudgetExceeded past `max_paths` maximal paths.
 */
PathReport find_paths(const HMap& h, Monomial start, std::size_t max_paths = 200000);

/// Replaces `removed` by `added` after checking both cover the same monomials
/// and that every removed interval belongs to p. Throws RotationError.
Partition rotate(const Partition& p, const std::vector<Interval>& removed, const std::vector<Interval>& added);

/**
 * Cyclic rotation along a_v, ..., a_p (each a_j the bottom of [a_j, c_j] in p):
 * the intervals become [a_v, c_p] and [a_{j+1}, c_j]. Needs a_{j+1} | c_j and
 * a_v | c_p; throws RotationError naming the failing pair otherwise.
 */
Partition rotate_path(const Partition& p, const std::vector<Monomial>& segment);

/// One swap performed while enforcing property (*).
struct StarSwap {
  Monomial w;       // the pairwise lcm w_ij whose image was moved
  Monomial f;       // generator whose interval absorbed h(w_ij)
};

/**
 * Enforces: for every pairwise lcm w_ij ∈ B outside the generator intervals
 * and every generator f_j (j > 1) dividing it, h(w_ij) ∉ (u_j, u'_j). A
 * violation is fixed by trading [f_j, c'_j], [w_ij, h(w_ij)] for
 * [f_j, h(w_ij)], [u'_j, c'_j].
 */
HMap normalize_star(const QuotientPair& q, const HMap& h, std::vector<StarSwap>* swaps = nullptr);

struct UpgradedPartition {
  Partition partition;  // of I/J, sdepth ≥ d+2
};

struct SubidealWitness {
  Ideal ideal;                 // I'
  Ideal denominator;           // J' = J ∩ I'
  Partition quotient_partition;  // of I/(J, I'), sdepth ≥ d+2
  int quotient_depth = 0;        // depth I/(J, I')
  Unsat refutation;              // sdepth I'/J' < d+2
};

using SurgeryOutcome = std::variant<UpgradedPartition, SubidealWitness>;

struct DriverOptions {
  SearchLimits limits{};
  bool trace = false;
};

struct DriverRun {
  std::optional<SurgeryOutcome> outcome;
  /// Which branch produced the outcome: "case1", "case2", "case3", suffixed
  /// with "/solver" when a partition had to be found by search, or
  /// "fallback" when the case analysis produced nothing certifiable.
  std::string route;
  bool solver_assisted = false;
  std::vector<std::string> trace;
  /// Steps where the case analysis could not proceed as written.
  std::vector<std::string> anomalies;
};

struct Ml1Check {
  bool r_is_two = false;
  bool s_in_range = false;
  bool c_contained = false;
  bool b_admissible = false;
  bool reduced_sdepth = false;
  std::optional<Partition> pb;  // certificate for sdepth(I_b/J_b) ≥ d+2
  std::string failed;           // first failing clause, empty when all hold

  bool ok() const { return failed.empty(); }
};

/// Evaluates the hypotheses of the r = 2 surgery lemma for (q, b).
Ml1Check check_ml1_hypotheses(const QuotientPair& q, Monomial b, const SearchLimits& limits = {});

/**
 * The r = 2 partition surgery: either an sdepth-(d+2) partition of I/J or a
 * proper subideal I' with sdepth(I'/J') ≤ d+1 and depth I/(J,I') ≥ d+1.
 * Throws PreconditionError naming the failed hypothesis.
 */
DriverRun ml1_driver(const QuotientPair& q, Monomial b, const DriverOptions& options = {});

/**
 * Runs the same path machinery for any r on a given P_b, after enforcing
 * (*): classify paths from the first admissible a_1, apply the weak/bad path
 * rewrites and close up T. No hypotheses are checked.
 */
DriverRun surgery_walk(const QuotientPair& q, Monomial b, const Partition& pb, const DriverOptions& options = {});

struct OutcomeCheck {
  bool ok = true;
  std::string message;
};

/// Re-verifies an outcome with the partition, sdepth and depth engines.
OutcomeCheck certify_outcome(const QuotientPair& q, const SurgeryOutcome& outcome, const SearchLimits& limits = {});

}  // namespace sdlab
