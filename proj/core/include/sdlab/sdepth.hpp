#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdlab/errors.hpp"
#include "sdlab/ideal.hpp"

namespace sdlab {

class MalformedIntervalError : public InputError {
 public:
  using InputError::InputError;
};

/// [lo, hi] = {w : lo | w, w | hi}.
struct Interval {
  Monomial lo;
  Monomial hi;

  bool contains(Monomial w) const { return lo.divides(w) && w.divides(hi); }
  bool operator==(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// A family of intervals meant to partition P_{I\J}.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::vector<Interval>& intervals() { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  void add(Interval iv) { intervals_.push_back(iv); }

  /// min over intervals of deg(hi); -1 for the empty family.
  int sdepth_value() const;
  /// Interval whose lo is `lo`, if any.
  const Interval* find_by_lo(Monomial lo) const;
  /// Interval containing `w`, if any.
  const Interval* find_containing(Monomial w) const;
  /// Sorts intervals canonically by (lo, hi).
  void canonicalize();

 private:
  std::vector<Interval> intervals_;
};

enum class CoverProblem { kNone, kMissing, kDoubleCovered, kOutside };

struct PartitionCheck {
  bool ok = true;
  CoverProblem problem = CoverProblem::kNone;
  Monomial offending;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks that `p` is a disjoint cover of P_{I\J}. Throws MalformedIntervalError
/// when some interval has lo ∤ hi.
PartitionCheck verify_partition(const QuotientPair& q, const Partition& p);

/// Exhaustive search exhausted without a partition of sdepth ≥ k.
struct Unsat {
  int k = 0;
  std::uint64_t nodes = 0;
};

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

using Decision = std::variant<Partition, Unsat>;

/**
 * Decides sdepth(I/J) ≥ k.
 *
 * Monomials of degree < k are assigned in canonical order to intervals whose
 * top has degree exactly k; everything left over of degree ≥ k becomes a
 * singleton. Restricting tops to degree k loses nothing, since any interval
 * [u, v] splits into intervals topped in degree deg v - 1 plus {v}. Failed
 * coverage states are memoized; an uncovered monomial with no free top above
 * it prunes the branch. Throws InputError unless d ≤ k ≤ n and BudgetExceeded
 * when `limits.max_nodes` is hit.
 */
Decision sdepth_decide(const QuotientPair& q, int k, const SearchLimits& limits = {});

/// sdepth_decide without the range precondition: k below d is decided at d,
/// k above n is Unsat.
Decision sdepth_at_least(const QuotientPair& q, int k, const SearchLimits& limits = {});

struct SdepthResult {
  int value = 0;
  Partition certificate;
  std::optional<Unsat> refutation;  // for value + 1; absent when value = n
};

SdepthResult sdepth(const QuotientPair& q, const SearchLimits& limits = {});

/// Splits every interval starting below degree k and ending above it, until
/// each such interval ends in degree exactly k. The covered set is unchanged.
Partition normalize_partition(const Partition& p, int k);

/// Adds singletons for every monomial of P_{I\J} of degree ≥ k not yet covered.
Partition complete_with_singletons(const QuotientPair& q, Partition p, int k);

/// u·K[Z]: generator u and the variable set Z.
struct StanleySpace {
  Monomial generator;
  Monomial variables;
};

/// Interval [u, v] ↦ u·K[x_j : j ∈ vars(v)]. Throws PreconditionError when `p`
/// does not verify.
std::vector<StanleySpace> export_stanley_decomposition(const QuotientPair& q, const Partition& p);

}  // namespace sdlab
