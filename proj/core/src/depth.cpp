#include "sdlab/depth.hpp"

#include <algorithm>
#include <unordered_map>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab {

namespace {

/// Sign of removing variable j from F: (-1)^{#elements of F below j}.
int removal_sign(VarMask f, int j) {
  const VarMask below = f & ((VarMask{1} << (j - 1)) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

/// Subsets of `a` of size i, in increasing mask order.
std::vector<VarMask> subsets_of_size(VarMask a, int i) {
  std::vector<VarMask> out;
  VarMask sub = 0;
  while (true) {
    if (std::popcount(sub) == i) out.push_back(sub);
    if (sub == a) break;
    sub = (sub - a) & a;
  }
  return out;
}

class KoszulComponent {
 public:
  KoszulComponent(const QuotientPair& q, VarMask a, VarMask twice) : q_(q), a_(a), twice_(twice) {
    const int top = std::popcount(a);
    basis_.resize(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
      for (VarMask f : subsets_of_size(a, i)) {
        if (alive(f)) basis_[static_cast<std::size_t>(i)].push_back(f);
      }
    }
  }

  int top() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int i) const {
    return (i < 0 || i > top()) ? 0 : basis_[static_cast<std::size_t>(i)].size();
  }

  /// rank of ∂_i : K_i → K_{i-1}.
  std::size_t boundary_rank(int i) {
    if (i <= 0 || i > top()) return 0;
    if (auto it = ranks_.find(i); it != ranks_.end()) return it->second;
    const auto& src = basis_[static_cast<std::size_t>(i)];
    const auto& dst = basis_[static_cast<std::size_t>(i - 1)];
    std::size_t r = 0;
    if (!src.empty() && !dst.empty()) {
      std::unordered_map<VarMask, std::size_t> index;
      for (std::size_t k = 0; k < dst.size(); ++k) index.emplace(dst[k], k);
      IntMatrix m(dst.size(), src.size());
      for (std::size_t col = 0; col < src.size(); ++col) {
        const VarMask f = src[col];
        for (VarMask rest = f; rest != 0; rest &= rest - 1) {
          const int j = std::countr_zero(rest) + 1;
          const auto it = index.find(f & ~(VarMask{1} << (j - 1)));
          if (it != index.end()) m(it->second, col) = removal_sign(f, j);
        }
      }
      r = exact_rank(m, q_.field());
    }
    ranks_.emplace(i, r);
    return r;
  }

  int homology(int i) {
    if (i < 0 || i > top()) return 0;
    return static_cast<int>(dim(i)) - static_cast<int>(boundary_rank(i)) - static_cast<int>(boundary_rank(i + 1));
  }

 private:
  /// e_F survives iff the coefficient monomial x^{a-F} lies in I\J.
  bool alive(VarMask f) const {
    const VarMask support = a_ & ~(f & ~twice_);
    return q_.in_poset(Monomial::from_mask(support));
  }

  const QuotientPair& q_;
  VarMask a_;
  VarMask twice_;
  std::vector<std::vector<VarMask>> basis_;
  std::unordered_map<int, std::size_t> ranks_;
};

KoszulDegreeReport full_report(const QuotientPair& q, VarMask a, VarMask twice) {
  KoszulComponent comp(q, a, twice);
  KoszulDegreeReport rep;
  rep.degree = Monomial::from_mask(a);
  rep.betti.assign(static_cast<std::size_t>(q.ambient()) + 1, 0);
  for (int i = 0; i <= comp.top(); ++i) rep.betti[static_cast<std::size_t>(i)] = comp.homology(i);
  return rep;
}

/// Faces of Δ (squarefree monomials outside I), canonical order.
std::vector<Monomial> stanley_reisner_faces(const Ideal& ideal) {
  std::vector<Monomial> faces;
  const VarMask limit = VarMask{1} << ideal.ambient();
  for (VarMask mask = 0; mask < limit; ++mask) {
    const Monomial m = Monomial::from_mask(mask);
    if (!ideal.contains(m)) faces.push_back(m);
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

void check_oracle_input(const Ideal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InputError("Stanley-Reisner oracle needs a proper nonzero ideal");
  }
}

}  // namespace

KoszulDegreeReport koszul_component(const QuotientPair& q, Monomial a) {
  check_ambient(a, q.ambient());
  return full_report(q, a.mask(), 0);
}

KoszulDegreeReport koszul_component(const QuotientPair& q, Monomial a, Monomial twice) {
  check_ambient(a, q.ambient());
  if (!twice.divides(a)) throw InputError("doubled variables must lie in the support");
  return full_report(q, a.mask(), twice.mask());
}

DepthResult depth(const QuotientPair& q, const DepthOptions& options) {
  const int n = q.ambient();
  std::vector<Monomial> degrees;
  const VarMask limit = VarMask{1} << n;
  for (VarMask mask = 0; mask < limit; ++mask) degrees.push_back(Monomial::from_mask(mask));
  std::sort(degrees.begin(), degrees.end());

  int best = -1;
  Monomial witness;
  for (Monomial a : degrees) {
    // Only indices above the current best matter, and h_i = 0 for i > |a|.
    const int floor = best + 1;
    if (a.degree() < floor) continue;
    KoszulComponent comp(q, a.mask(), 0);
    for (int i = comp.top(); i >= floor; --i) {
      if (comp.homology(i) != 0) {
        best = i;
        witness = a;
        break;
      }
    }
  }
  if (best < 0) throw InvariantError("Koszul homology vanished in every degree of a nonzero module");

  if (options.paranoid) {
    // Exponent-2 variables: every nonempty `twice` ⊆ a.
    for (VarMask a = 1; a < limit; ++a) {
      for (VarMask twice = a; twice != 0; twice = (twice - 1) & a) {
        KoszulComponent comp(q, a, twice);
        for (int i = 0; i <= comp.top(); ++i) {
          if (comp.homology(i) != 0) {
            throw InvariantError("nonzero Koszul homology outside squarefree degrees at " +
                                 to_string(Monomial::from_mask(a)) + " (doubled " +
                                 to_string(Monomial::from_mask(twice)) + ")");
          }
        }
      }
    }
  }

  DepthResult res;
  res.pd = best;
  res.depth = n - best;
  res.witness_degree = witness;
  res.witness_index = best;
  res.field = q.field();
  return res;
}

int module_depth(const Ideal& numerator, const Ideal& denominator, Field field) {
  if (denominator.contains(numerator)) return kInfiniteDepth;
  return depth(QuotientPair(numerator, intersect(numerator, denominator), field)).depth;
}

std::vector<int> reduced_homology(const std::vector<Monomial>& faces, Field field) {
  if (faces.empty()) return {};
  int top_dim = -1;
  for (Monomial f : faces) top_dim = std::max(top_dim, f.degree() - 1);
  // chains[k] = faces of dimension k-1 (k = number of vertices).
  std::vector<std::vector<VarMask>> chains(static_cast<std::size_t>(top_dim) + 2);
  for (Monomial f : faces) chains[static_cast<std::size_t>(f.degree())].push_back(f.mask());

  auto boundary_rank = [&](std::size_t k) -> std::size_t {  // ∂ : C_{k-1} → C_{k-2}
    if (k == 0 || k >= chains.size()) return 0;
    const auto& src = chains[k];
    const auto& dst = chains[k - 1];
    if (src.empty() || dst.empty()) return 0;
    std::unordered_map<VarMask, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      for (VarMask rest = src[col]; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest) + 1;
        const auto it = index.find(src[col] & ~(VarMask{1} << (j - 1)));
        if (it == index.end()) throw InputError("face list is not closed under taking subsets");
        m(it->second, col) = removal_sign(src[col], j);
      }
    }
    return exact_rank(m, field);
  };

  std::vector<std::size_t> ranks(chains.size() + 1, 0);
  for (std::size_t k = 1; k < chains.size(); ++k) ranks[k] = boundary_rank(k);
  std::vector<int> out(chains.size(), 0);
  for (std::size_t k = 0; k < chains.size(); ++k) {
    out[k] = static_cast<int>(chains[k].size()) - static_cast<int>(ranks[k]) - static_cast<int>(ranks[k + 1]);
  }
  return out;
}

int reisner_depth_oracle(const Ideal& ideal, Field field) {
  check_oracle_input(ideal);
  const std::vector<Monomial> faces = stanley_reisner_faces(ideal);
  int best = kInfiniteDepth;
  for (Monomial sigma : faces) {
    std::vector<Monomial> link;
    for (Monomial tau : faces) {
      if ((tau.mask() & sigma.mask()) == 0 && !ideal.contains(tau.lcm(sigma))) link.push_back(tau);
    }
    const std::vector<int> h = reduced_homology(link, field);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] != 0) {
        const int j = static_cast<int>(k) - 1;
        best = std::min(best, sigma.degree() + 1 + j);
        break;
      }
    }
  }
  if (best == kInfiniteDepth) throw InvariantError("local cohomology of S/I vanished everywhere");
  return best;
}

int hochster_projective_dimension(const Ideal& ideal, Field field) {
  check_oracle_input(ideal);
  const std::vector<Monomial> faces = stanley_reisner_faces(ideal);
  int pd = 0;
  const VarMask limit = VarMask{1} << ideal.ambient();
  for (VarMask w = 0; w < limit; ++w) {
    std::vector<Monomial> restricted;
    for (Monomial f : faces) {
      if ((f.mask() & ~w) == 0) restricted.push_back(f);
    }
    const std::vector<int> h = reduced_homology(restricted, field);
    const int size = std::popcount(w);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] != 0) pd = std::max(pd, size - (static_cast<int>(k) - 1) - 1);
    }
  }
  return pd;
}

}  // namespace sdlab
