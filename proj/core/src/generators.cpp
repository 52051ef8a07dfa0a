#include "sdlab/generators.hpp"

#include <algorithm>
#include <numeric>

#include "sdlab/errors.hpp"
#include "sdlab/poset.hpp"

namespace sdlab {

namespace {

Monomial random_monomial(std::mt19937_64& rng, int n, int degree) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  vars.resize(static_cast<std::size_t>(std::min(degree, n)));
  return Monomial::from_vars(vars);
}

/// A degree-k monomial supported in `block`.
Monomial random_submonomial(std::mt19937_64& rng, Monomial block, int k) {
  std::vector<int> vars = block.vars();
  std::shuffle(vars.begin(), vars.end(), rng);
  vars.resize(static_cast<std::size_t>(std::min<int>(k, static_cast<int>(vars.size()))));
  return Monomial::from_vars(vars);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

QuotientPair random_quotient(std::mt19937_64& rng, int n) {
  for (;;) {
    std::vector<Monomial> gens;
    const int count = uniform(rng, 1, 5);
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, n, uniform(rng, 1, std::min(3, n))));
    const Ideal num = minimalize(n, gens);
    std::vector<Monomial> killed;
    const int kcount = uniform(rng, 0, 5);
    for (int i = 0; i < kcount; ++i) {
      const Monomial g = num.gens()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(num.gens().size()) - 1))];
      killed.push_back(g.lcm(random_monomial(rng, n, uniform(rng, 1, 3))));
    }
    try {
      return form_quotient(num, minimalize(n, killed));
    } catch (const EmptyQuotientError&) {
    }
  }
}

std::optional<Ml1Candidate> random_ml1_candidate(std::mt19937_64& rng, int n) {
  const int d = n >= 6 ? uniform(rng, 1, 2) : 1;
  const Monomial f1 = random_monomial(rng, n, d);
  const Monomial f2 = random_monomial(rng, n, d);
  if (f1 == f2) return std::nullopt;
  std::vector<Monomial> gens{f1, f2};
  // Extras drawn from a small block of variables overlap a lot, which is what
  // produces C-elements of the form (e) ∩ (e').
  const Monomial rest = Monomial::from_mask(((VarMask{1} << n) - 1) & ~f1.lcm(f2).mask());
  const Monomial block = random_submonomial(rng, rest, uniform(rng, d + 1, d + 4));
  const int extras = uniform(rng, 0, 10);
  for (int i = 0; i < extras; ++i) {
    const Monomial e = uniform(rng, 0, 3) == 0 ? random_monomial(rng, n, d + 1) : random_submonomial(rng, block, d + 1);
    if (e.degree() == d + 1 && !f1.divides(e) && !f2.divides(e)) gens.push_back(e);
  }
  const Ideal num = minimalize(n, gens);
  std::vector<Monomial> es;
  for (Monomial g : num.gens()) {
    if (g.degree() > d) es.push_back(g);
  }

  // Kill every degree-(d+2) monomial outside the allowed pattern, some
  // multiples of the f_i in degree d+1, and a few more.
  std::vector<Monomial> killed;
  std::bernoulli_distribution extra(0.1);
  std::bernoulli_distribution drop_b(std::uniform_real_distribution<double>(0.0, 0.5)(rng));
  for (VarMask mask = 0; mask < (VarMask{1} << n); ++mask) {
    const Monomial c = Monomial::from_mask(mask);
    if (!num.contains(c)) continue;
    if (c.degree() == d + 1 && (f1.divides(c) || f2.divides(c)) && drop_b(rng)) killed.push_back(c);
    if (c.degree() != d + 2) continue;
    int e_count = 0;
    for (Monomial e : es) e_count += e.divides(c) ? 1 : 0;
    const bool in1 = f1.divides(c);
    const bool in2 = f2.divides(c);
    const bool allowed = (in1 && in2) || (e_count >= 1 && (in1 || in2)) || e_count >= 2;
    if (!allowed || extra(rng)) killed.push_back(c);
  }
  std::optional<QuotientPair> q;
  try {
    q = form_quotient(num, minimalize(n, killed));
  } catch (const EmptyQuotientError&) {
    return std::nullopt;
  }
  const StrataReport st = strata(*q);
  if (st.r != 2 || st.d != d) return std::nullopt;
  std::vector<Monomial> choices;
  for (Monomial b : st.B) {
    if (st.f_list[0].divides(b) != st.f_list[1].divides(b)) choices.push_back(b);
  }
  if (choices.empty()) return std::nullopt;
  return Ml1Candidate{*q, choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choices.size()) - 1))]};
}

}  // namespace sdlab
