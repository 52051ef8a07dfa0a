#include "sdlab/sdepth.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sdlab/poset.hpp"

namespace sdlab {

std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

int Partition::sdepth_value() const {
  if (intervals_.empty()) return -1;
  int v = intervals_.front().hi.degree();
  for (const Interval& iv : intervals_) v = std::min(v, iv.hi.degree());
  return v;
}

const Interval* Partition::find_by_lo(Monomial lo) const {
  for (const Interval& iv : intervals_) {
    if (iv.lo == lo) return &iv;
  }
  return nullptr;
}

const Interval* Partition::find_containing(Monomial w) const {
  for (const Interval& iv : intervals_) {
    if (iv.contains(w)) return &iv;
  }
  return nullptr;
}

void Partition::canonicalize() {
  std::sort(intervals_.begin(), intervals_.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
}

PartitionCheck verify_partition(const QuotientPair& q, const Partition& p) {
  for (const Interval& iv : p.intervals()) {
    check_ambient(iv.hi, q.ambient());
    if (!iv.lo.divides(iv.hi)) throw MalformedIntervalError("malformed interval " + to_string(iv) + ": lo does not divide hi");
  }
  const int n = q.ambient();
  std::vector<std::uint8_t> hits(std::size_t{1} << n, 0);
  for (const Interval& iv : p.intervals()) {
    const VarMask free = iv.hi.mask() & ~iv.lo.mask();
    VarMask sub = 0;
    while (true) {
      const Monomial w = Monomial::from_mask(iv.lo.mask() | sub);
      if (!q.in_poset(w)) {
        return {false, CoverProblem::kOutside, w, to_string(w) + " in " + to_string(iv) + " lies outside P_{I\\J}"};
      }
      if (++hits[w.mask()] > 1) {
        return {false, CoverProblem::kDoubleCovered, w, to_string(w) + " is covered twice"};
      }
      if (sub == free) break;
      sub = (sub - free) & free;
    }
  }
  for (Monomial w : enumerate_poset(q).elements) {
    if (hits[w.mask()] == 0) return {false, CoverProblem::kMissing, w, to_string(w) + " is not covered"};
  }
  return {};
}

namespace {

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t w : v) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class DecideSearch {
 public:
  DecideSearch(const QuotientPair& q, int k, const SearchLimits& limits)
      : q_(q), k_(k), limits_(limits), poset_(enumerate_poset(q)) {
    const int n = q.ambient();
    id_of_.assign(std::size_t{1} << n, -1);
    for (Monomial m : poset_.elements) {
      if (m.degree() < k) {
        id_of_[m.mask()] = static_cast<int>(ids_.size());
        ids_.push_back(m);
      }
    }
    low_count_ = ids_.size();
    for (Monomial m : poset_.degree(k)) {
      id_of_[m.mask()] = static_cast<int>(ids_.size());
      ids_.push_back(m);
    }
    covered_.assign((ids_.size() + 63) / 64, 0);
    tops_above_.assign(low_count_, {});
    lows_below_.assign(ids_.size(), {});
    for (std::size_t t = low_count_; t < ids_.size(); ++t) {
      const VarMask top = ids_[t].mask();
      for (VarMask sub = (top - 1) & top;; sub = (sub - 1) & top) {
        const int id = id_of_[sub];
        if (id >= 0 && static_cast<std::size_t>(id) < low_count_) {
          tops_above_[static_cast<std::size_t>(id)].push_back(static_cast<int>(t));
          lows_below_[t].push_back(id);
        }
        if (sub == 0) break;
      }
    }
    avail_.resize(low_count_);
    for (std::size_t i = 0; i < low_count_; ++i) avail_[i] = static_cast<int>(tops_above_[i].size());
  }

  Decision run() {
    for (std::size_t i = 0; i < low_count_; ++i) {
      if (avail_[i] == 0) return Unsat{k_, 1};
    }
    if (!solve(0)) return Unsat{k_, nodes_};
    Partition p(chosen_);
    p = complete_with_singletons(q_, std::move(p), k_);
    p.canonicalize();
    return p;
  }

 private:
  bool is_covered(std::size_t id) const { return (covered_[id >> 6] >> (id & 63)) & 1ULL; }
  void flip(std::size_t id) { covered_[id >> 6] ^= 1ULL << (id & 63); }

  bool solve(std::size_t from) {
    if (limits_.max_nodes != 0 && nodes_ >= limits_.max_nodes) {
      throw BudgetExceeded("sdepth search exceeded " + std::to_string(limits_.max_nodes) + " nodes at k=" + std::to_string(k_));
    }
    ++nodes_;
    while (from < low_count_ && is_covered(from)) ++from;
    if (from == low_count_) return true;
    if (failed_.count(covered_) != 0) return false;

    const Monomial u = ids_[from];
    for (int t : tops_above_[from]) {
      if (is_covered(static_cast<std::size_t>(t))) continue;
      const Monomial top = ids_[static_cast<std::size_t>(t)];
      // Members of [u, top] other than top itself.
      members_.clear();
      const VarMask free = top.mask() & ~u.mask();
      bool clash = false;
      for (VarMask sub = 0;; sub = (sub - free) & free) {
        if (sub == free) break;
        const auto id = static_cast<std::size_t>(id_of_[u.mask() | sub]);
        if (is_covered(id)) {
          clash = true;
          break;
        }
        members_.push_back(id);
      }
      if (clash) continue;
      const std::vector<std::size_t> members = members_;
      for (std::size_t id : members) flip(id);
      flip(static_cast<std::size_t>(t));
      bool dead = false;
      for (int low : lows_below_[static_cast<std::size_t>(t)]) {
        const auto l = static_cast<std::size_t>(low);
        if (--avail_[l] == 0 && !is_covered(l)) dead = true;
      }
      chosen_.push_back({u, top});
      if (!dead && solve(from + 1)) return true;
      chosen_.pop_back();
      for (int low : lows_below_[static_cast<std::size_t>(t)]) ++avail_[static_cast<std::size_t>(low)];
      flip(static_cast<std::size_t>(t));
      for (std::size_t id : members) flip(id);
    }
    if (failed_.size() < kMemoCap) failed_.insert(covered_);
    return false;
  }

  static constexpr std::size_t kMemoCap = 4'000'000;

  const QuotientPair& q_;
  int k_;
  SearchLimits limits_;
  PosetSnapshot poset_;
  std::vector<int> id_of_;
  std::vector<Monomial> ids_;
  std::size_t low_count_ = 0;
  std::vector<std::vector<int>> tops_above_;
  std::vector<std::vector<int>> lows_below_;
  std::vector<int> avail_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::size_t> members_;
  std::vector<Interval> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> failed_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Decision sdepth_decide(const QuotientPair& q, int k, const SearchLimits& limits) {
  const int d = enumerate_poset(q).min_degree();
  if (k < d || k > q.ambient()) {
    throw InputError("sdepth decision level k=" + std::to_string(k) + " outside [" + std::to_string(d) + ", " +
                     std::to_string(q.ambient()) + "]");
  }
  return DecideSearch(q, k, limits).run();
}

Decision sdepth_at_least(const QuotientPair& q, int k, const SearchLimits& limits) {
  if (k > q.ambient()) return Unsat{k, 0};
  return DecideSearch(q, std::max(k, enumerate_poset(q).min_degree()), limits).run();
}

SdepthResult sdepth(const QuotientPair& q, const SearchLimits& limits) {
  const int d = enumerate_poset(q).min_degree();
  SdepthResult res;
  res.value = d;
  res.certificate = std::get<Partition>(sdepth_decide(q, d, limits));
  for (int k = d + 1; k <= q.ambient(); ++k) {
    Decision dec = sdepth_decide(q, k, limits);
    if (auto* unsat = std::get_if<Unsat>(&dec)) {
      res.refutation = *unsat;
      break;
    }
    res.value = k;
    res.certificate = std::move(std::get<Partition>(dec));
  }
  return res;
}

Partition normalize_partition(const Partition& p, int k) {
  std::vector<Interval> work = p.intervals();
  std::vector<Interval> out;
  while (!work.empty()) {
    const Interval iv = work.back();
    work.pop_back();
    if (iv.lo.degree() >= k || iv.hi.degree() <= k) {
      out.push_back(iv);
      continue;
    }
    const VarMask free = iv.hi.mask() & ~iv.lo.mask();
    const int x = 32 - std::countl_zero(free);
    work.push_back({iv.lo, iv.hi.without(x)});
    work.push_back({iv.lo.times(x), iv.hi});
  }
  Partition res(std::move(out));
  res.canonicalize();
  return res;
}

Partition complete_with_singletons(const QuotientPair& q, Partition p, int k) {
  std::unordered_set<Monomial, MonomialHash> covered;
  for (const Interval& iv : p.intervals()) {
    const VarMask free = iv.hi.mask() & ~iv.lo.mask();
    for (VarMask sub = 0;; sub = (sub - free) & free) {
      covered.insert(Monomial::from_mask(iv.lo.mask() | sub));
      if (sub == free) break;
    }
  }
  for (Monomial w : enumerate_poset(q).elements) {
    if (w.degree() >= k && covered.count(w) == 0) p.add({w, w});
  }
  return p;
}

std::vector<StanleySpace> export_stanley_decomposition(const QuotientPair& q, const Partition& p) {
  if (const PartitionCheck check = verify_partition(q, p); !check) {
    throw PreconditionError("cannot export an unverified partition: " + check.message);
  }
  std::vector<StanleySpace> out;
  out.reserve(p.intervals().size());
  for (const Interval& iv : p.intervals()) out.push_back({iv.lo, iv.hi});
  return out;
}

}  // namespace sdlab
