#include "sdlab/verdicts.hpp"

#include <algorithm>

#include "sdlab/depth.hpp"
#include "sdlab/hilbert.hpp"
#include "sdlab/io.hpp"
#include "sdlab/poset.hpp"

namespace sdlab {

namespace {

Hypothesis hyp(std::string name, std::string value, bool holds) { return {std::move(name), std::move(value), holds}; }

Hypothesis hyp_int(std::string name, int value, bool holds) { return hyp(std::move(name), std::to_string(value), holds); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Verdict make(std::string rule, std::string statement, std::vector<Hypothesis> hs, Quantity qty, Relation rel, int bound,
             const Measurements& m) {
  Verdict v{std::move(rule), std::move(statement), std::move(hs), true, qty, rel, bound, 0, true};
  v.applicable = std::all_of(v.hypotheses.begin(), v.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
  v.observed = qty == Quantity::kDepth ? m.depth : m.sdepth;
  if (v.applicable) {
    switch (rel) {
      case Relation::kAtMost: v.consistent = v.observed <= bound; break;
      case Relation::kAtLeast: v.consistent = v.observed >= bound; break;
      case Relation::kEquals: v.consistent = v.observed == bound; break;
    }
  }
  return v;
}

/// The squarefree degree-k divisors of m.
std::vector<Monomial> divisors_of_degree(Monomial m, int k) {
  std::vector<Monomial> out;
  const VarMask full = m.mask();
  for (VarMask sub = full;; sub = (sub - 1) & full) {
    if (std::popcount(sub) == k) out.push_back(Monomial::from_mask(sub));
    if (sub == 0) break;
  }
  return out;
}

}  // namespace

std::string to_string(Quantity quantity) { return quantity == Quantity::kDepth ? "depth" : "sdepth"; }

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kAtMost: return "<=";
    case Relation::kAtLeast: return ">=";
    case Relation::kEquals: return "=";
  }
  return "?";
}

Measurements measure(const QuotientPair& q, const SearchLimits& limits) {
  Measurements m;
  m.sdepth = sdepth(q, limits).value;
  m.depth = depth(q).depth;
  m.hdepth = hdepth1(hilbert_series(q)).value;
  m.field = q.field();
  return m;
}

std::vector<Verdict> bounds_report(const QuotientPair& q) { return bounds_report(q, measure(q)); }

std::vector<Verdict> bounds_report(const QuotientPair& q, const Measurements& m) {
  const StrataReport st = strata(q);
  const int d = st.d;
  // Every rule is phrased for I/J with J generated in degrees above d.
  const Hypothesis normal = hyp("J has no generator of degree <= d", yes_no(!q.normalization_warning()), !q.normalization_warning());
  const bool sd_is_d1 = m.sdepth == d + 1;
  const bool no_e = st.E.empty();

  std::vector<Verdict> out;
  out.push_back(make("depth_lower_bound", "depth >= d", {normal}, Quantity::kDepth, Relation::kAtLeast, d, m));
  out.push_back(make("sdepth_d_forces_depth_d", "sdepth = d implies depth = d",
                     {normal, hyp_int("sdepth = d", m.sdepth, m.sdepth == d)}, Quantity::kDepth, Relation::kEquals, d, m));

  const bool excess = st.s > st.q + st.r;
  const std::string sqr = "s=" + std::to_string(st.s) + ", q=" + std::to_string(st.q) + ", r=" + std::to_string(st.r);
  out.push_back(make("excess_b_over_c", "s > q + r implies depth <= d+1", {normal, hyp("s > q + r", sqr, excess)},
                     Quantity::kDepth, Relation::kAtMost, d + 1, m));
  out.push_back(make("excess_b_over_c_sdepth", "s > q + r implies sdepth <= d+1", {normal, hyp("s > q + r", sqr, excess)},
                     Quantity::kSdepth, Relation::kAtMost, d + 1, m));
  const bool few = st.s < 2 * st.r;
  out.push_back(make("few_b", "s < 2r implies depth <= d+1", {normal, hyp("s < 2r", sqr, few)}, Quantity::kDepth,
                     Relation::kAtMost, d + 1, m));
  out.push_back(make("few_b_sdepth", "s < 2r implies sdepth <= d+1", {normal, hyp("s < 2r", sqr, few)},
                     Quantity::kSdepth, Relation::kAtMost, d + 1, m));

  const Hypothesis sd_hyp = hyp_int("sdepth = d+1", m.sdepth, sd_is_d1);
  const bool small_r = st.r == 1 || (st.r > 1 && st.r <= 3 && no_e);
  out.push_back(make("conjecture_r1_or_e_empty", "r = 1, or 1 < r <= 3 with E empty, and sdepth = d+1 imply depth <= d+1",
                     {normal, hyp("r = 1 or (1 < r <= 3 and E empty)", "r=" + std::to_string(st.r) + ", |E|=" +
                                  std::to_string(st.E.size()), small_r), sd_hyp},
                     Quantity::kDepth, Relation::kAtMost, d + 1, m));
  out.push_back(make("conjecture_r_at_most_3", "r <= 3 and sdepth = d+1 imply depth <= d+1",
                     {normal, hyp_int("r <= 3", st.r, st.r <= 3), sd_hyp}, Quantity::kDepth, Relation::kAtMost, d + 1, m));

  VarMask f_support = 0;
  for (Monomial f : st.f_list) f_support |= f.mask();
  const auto free_c = std::find_if(st.C.begin(), st.C.end(), [f_support](Monomial c) { return (c.mask() & ~f_support) != 0; });
  out.push_back(make("conjecture_r4_free_variable",
                     "r = 4, E empty, some c in C with a variable outside the f supports, and sdepth = d+1 imply depth <= d+1",
                     {normal, hyp_int("r = 4", st.r, st.r == 4), hyp_int("E empty", static_cast<int>(st.E.size()), no_e),
                      hyp("exists c in C with supp c outside supp f", free_c == st.C.end() ? "none" : to_string(*free_c),
                          free_c != st.C.end()),
                      sd_hyp},
                     Quantity::kDepth, Relation::kAtMost, d + 1, m));

  const bool b_in_e_w = std::all_of(st.B.begin(), st.B.end(), [&](Monomial b) {
    return contains_sorted(st.E, b) || contains_sorted(st.W_B, b);
  });
  out.push_back(make("d1_b_in_e_or_w", "d = 1 and B inside E ∪ W imply depth = 1",
                     {normal, hyp_int("d = 1", d, d == 1), hyp("B inside E ∪ W", yes_no(b_in_e_w), b_in_e_w)},
                     Quantity::kDepth, Relation::kEquals, 1, m));

  Monomial offender;
  bool all_divisors_generators = true;
  for (Monomial b : st.B) {
    for (Monomial g : divisors_of_degree(b, d)) {
      if (!contains_sorted(st.f_list, g) && all_divisors_generators) {
        all_divisors_generators = false;
        offender = b;
      }
    }
  }
  // At d = 0 (I = S) the statement fails, e.g. for Stanley-Reisner rings of
  // positive depth; its induction starts at d = 1.
  out.push_back(make("b_divisors_are_generators",
                     "d >= 1, E empty and every degree-d divisor of every b in B a generator imply depth = d",
                     {normal, hyp_int("d >= 1", d, d >= 1), hyp_int("E empty", static_cast<int>(st.E.size()), no_e),
                      hyp("degree-d divisors of B are generators", all_divisors_generators ? "true" : "fails at " + to_string(offender),
                          all_divisors_generators)},
                     Quantity::kDepth, Relation::kEquals, d, m));

  out.push_back(make("sdepth_at_most_hdepth", "sdepth <= hdepth1", {hyp_int("hdepth1", m.hdepth, true)}, Quantity::kSdepth,
                     Relation::kAtMost, m.hdepth, m));
  return out;
}

bool all_consistent(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.applicable || v.consistent; });
}

bool AuditRecord::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.ok; });
}

std::vector<AuditCheck> AuditRecord::violations() const {
  std::vector<AuditCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const AuditCheck& c) { return !c.ok; });
  return out;
}

namespace {

std::string show(int depth) { return depth >= kInfiniteDepth ? "inf" : std::to_string(depth); }

/// depth inequalities for 0 → A → M → N → 0, with kInfiniteDepth for zero modules.
void depth_lemma(AuditRecord& rec, const std::string& name, int a, int m, int n) {
  const std::string vals = "depths " + show(a) + ", " + show(m) + ", " + show(n);
  const long long n1 = n >= kInfiniteDepth ? n : static_cast<long long>(n) + 1;
  rec.checks.push_back({name + ": middle >= min(left, right)", vals, m >= std::min(a, n)});
  rec.checks.push_back({name + ": left >= min(middle, right + 1)", vals, a >= std::min<long long>(m, n1)});
  rec.checks.push_back({name + ": right >= min(left - 1, middle)", vals, n >= std::min(a - 1, m)});
}

}  // namespace

AuditRecord consistency_audit(const QuotientPair& q, const std::vector<Ideal>& extra) {
  AuditRecord rec;
  const int n = q.ambient();
  const Field field = q.field();
  const Ideal& num = q.numerator();
  const Ideal& den = q.denominator();
  const int dm = depth(q).depth;
  const int d = strata(q).d;

  for (int j = 1; j <= n; ++j) {
    const Ideal ic = colon_var(num, j);
    const Ideal jc = colon_var(den, j);
    if (ic == jc) continue;
    const int dc = module_depth(ic, jc, field);
    rec.checks.push_back({"colon x" + std::to_string(j) + " does not lower depth", show(dc) + " vs " + show(dm), dc >= dm});
  }

  for (int t = 1; t <= n; ++t) {
    const Ideal xt = Ideal::principal(n, Monomial::variable(t));
    const Ideal it = intersect(num, xt);
    const int left = module_depth(it, intersect(den, xt), field);
    const Ideal killed = sum(den, it);
    const int right = module_depth(num, killed, field);
    depth_lemma(rec, "sequence for x" + std::to_string(t), left, dm, right);
    if (!killed.contains(num) && right == d && dm >= d + 1) {
      rec.checks.push_back({"depth d quotient along x" + std::to_string(t) + " pins depth to d+1", show(dm), dm == d + 1});
    }
  }

  std::vector<Ideal> subs = extra;
  const StrataReport st = strata(q);
  if (!st.f_list.empty()) subs.push_back(minimalize(n, st.f_list));
  if (!st.E.empty()) subs.push_back(minimalize(n, st.E));
  for (Monomial g : num.gens()) subs.push_back(Ideal::principal(n, g));
  for (const Ideal& sub : subs) {
    if (sub.is_zero() || sub == num || !num.contains(sub)) continue;
    const int left = module_depth(sub, intersect(den, sub), field);
    const int right = module_depth(num, sum(den, sub), field);
    depth_lemma(rec, "sequence for (" + to_string(sub) + ")", left, dm, right);
  }
  if (!rec.ok()) rec.instance = serialize_input(q);
  return rec;
}

}  // namespace sdlab
