#include "sdlab/poset.hpp"

#include <algorithm>

namespace sdlab {

int PosetSnapshot::min_degree() const { return elements.empty() ? -1 : elements.front().degree(); }

const std::vector<Monomial>& PosetSnapshot::degree(int k) const {
  static const std::vector<Monomial> kEmpty;
  if (k < 0 || k >= static_cast<int>(by_degree.size())) return kEmpty;
  return by_degree[static_cast<std::size_t>(k)];
}

PosetSnapshot enumerate_poset(const QuotientPair& q, std::optional<int> max_degree) {
  const int n = q.ambient();
  const int top = max_degree ? std::min(*max_degree, n) : n;
  PosetSnapshot snap;
  snap.ambient = n;
  snap.by_degree.assign(static_cast<std::size_t>(n) + 1, {});
  const VarMask limit = VarMask{1} << n;
  for (VarMask mask = 0; mask < limit; ++mask) {
    const Monomial m = Monomial::from_mask(mask);
    if (m.degree() > top || !q.in_poset(m)) continue;
    snap.elements.push_back(m);
  }
  std::sort(snap.elements.begin(), snap.elements.end());
  for (Monomial m : snap.elements) snap.by_degree[static_cast<std::size_t>(m.degree())].push_back(m);
  return snap;
}

std::vector<Monomial> restrict_to_var(const std::vector<Monomial>& set, int t) {
  std::vector<Monomial> out;
  std::copy_if(set.begin(), set.end(), std::back_inserter(out), [t](Monomial m) { return m.contains(t); });
  return out;
}

std::vector<Monomial> divisors_in(const std::vector<Monomial>& set, Monomial m) {
  std::vector<Monomial> out;
  std::copy_if(set.begin(), set.end(), std::back_inserter(out), [m](Monomial x) { return x.divides(m); });
  return out;
}

bool contains_sorted(const std::vector<Monomial>& sorted_set, Monomial m) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), m);
}

StrataReport strata(const QuotientPair& q) {
  const PosetSnapshot snap = enumerate_poset(q);
  StrataReport rep;
  rep.d = snap.min_degree();
  for (Monomial g : q.numerator().gens()) {
    (g.degree() == rep.d ? rep.f_list : rep.E).push_back(g);
  }
  // Generators below d can only occur when they lie in J.
  std::erase_if(rep.E, [&](Monomial g) { return g.degree() < rep.d; });
  rep.r = static_cast<int>(rep.f_list.size());
  rep.B = snap.degree(rep.d + 1);
  rep.C = snap.degree(rep.d + 2);
  rep.s = static_cast<int>(rep.B.size());
  rep.q = static_cast<int>(rep.C.size());

  for (std::size_t i = 0; i < rep.f_list.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.f_list.size(); ++j) {
      const Monomial w = rep.f_list[i].lcm(rep.f_list[j]);
      rep.W_all.push_back(w);
      if (w.degree() == rep.d + 1 && contains_sorted(rep.B, w)) rep.W_B.push_back(w);
    }
  }
  for (auto* set : {&rep.W_all, &rep.W_B}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
  for (Monomial c : rep.C) {
    if (contains_sorted(rep.W_all, c)) rep.C2.push_back(c);
    const bool all_in_w = std::all_of(rep.B.begin(), rep.B.end(), [&](Monomial b) {
      if (!b.divides(c) || contains_sorted(rep.E, b)) return true;
      return contains_sorted(rep.W_B, b);
    });
    if (all_in_w) rep.C3.push_back(c);
  }
  return rep;
}

}  // namespace sdlab
