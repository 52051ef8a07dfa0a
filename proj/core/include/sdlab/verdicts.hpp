#pragma once

#include <string>
#include <vector>

#include "sdlab/ideal.hpp"
#include "sdlab/sdepth.hpp"

namespace sdlab {

enum class Quantity { kDepth, kSdepth };
enum class Relation { kAtMost, kAtLeast, kEquals };

struct Hypothesis {
  std::string name;
  std::string value;  // the evaluated quantity, human readable
  bool holds = false;
};

/**
 * One implication "hypotheses ⇒ quantity relation bound" evaluated on an
 * instance. `consistent` is meaningful only when `applicable`.
 */
struct Verdict {
  std::string rule;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
  Quantity quantity = Quantity::kDepth;
  Relation relation = Relation::kAtMost;
  int bound = 0;
  int observed = 0;
  bool consistent = true;
};

/// Engine outputs the rules are checked against.
struct Measurements {
  int sdepth = 0;
  int depth = 0;
  int hdepth = 0;
  Field field;
};

Measurements measure(const QuotientPair& q, const SearchLimits& limits = {});

/// Every rule, applicable or not, in a fixed order.
std::vector<Verdict> bounds_report(const QuotientPair& q, const Measurements& m);
std::vector<Verdict> bounds_report(const QuotientPair& q);

bool all_consistent(const std::vector<Verdict>& verdicts);

struct AuditCheck {
  std::string name;
  std::string detail;
  bool ok = true;
};

struct AuditRecord {
  std::vector<AuditCheck> checks;
  std::string instance;  // serialized input, filled in when some check fails

  bool ok() const;
  std::vector<AuditCheck> violations() const;
};

/**
 * Colon monotonicity over every variable, the depth inequalities on the
 * sequences 0 → I∩(x_t)/J∩(x_t) → I/J → I/(J + I∩(x_t)) → 0 and
 * 0 → I'/J' → I/J → I/(J,I') → 0, and the "depth d quotient" step for each t.
 * The subideals I' are (f_1..f_r), (E) and each principal (g), g a minimal
 * generator, whenever proper and nonzero; `extra` adds more.
 */
AuditRecord consistency_audit(const QuotientPair& q, const std::vector<Ideal>& extra = {});

std::string to_string(Quantity quantity);
std::string to_string(Relation relation);

}  // namespace sdlab
