#include "sdlab/surgery.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "sdlab/depth.hpp"

namespace sdlab {

namespace {

std::vector<Monomial> members(const Interval& iv) {
  std::vector<Monomial> out;
  const VarMask free = iv.hi.mask() & ~iv.lo.mask();
  for (VarMask sub = 0;; sub = (sub - free) & free) {
    out.push_back(Monomial::from_mask(iv.lo.mask() | sub));
    if (sub == free) break;
  }
  return out;
}

bool divisible_by_any(const std::vector<Monomial>& gens, Monomial m) {
  return std::any_of(gens.begin(), gens.end(), [m](Monomial g) { return g.divides(m); });
}

void insert_sorted(std::vector<Monomial>& set, Monomial m) {
  const auto it = std::lower_bound(set.begin(), set.end(), m);
  if (it == set.end() || *it != m) set.insert(it, m);
}

std::string join(const std::vector<Monomial>& ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ms[i]);
  }
  return out + "}";
}

}  // namespace

Monomial designated_generator(const QuotientPair& q, Monomial b) {
  const StrataReport st = strata(q);
  std::vector<Monomial> dividing;
  for (Monomial f : st.f_list) {
    if (f.divides(b)) dividing.push_back(f);
  }
  if (dividing.size() != 1) {
    throw PreconditionError(to_string(b) + " must be a multiple of exactly one degree-d generator, found " +
                            std::to_string(dividing.size()));
  }
  return dividing.front();
}

QuotientPair build_reduced_pair(const QuotientPair& q, Monomial b) {
  const StrataReport st = strata(q);
  if (!contains_sorted(st.B, b)) throw InputError(to_string(b) + " is not in B");
  const Monomial f1 = designated_generator(q, b);
  std::vector<Monomial> gens;
  for (Monomial f : st.f_list) {
    if (f != f1) gens.push_back(f);
  }
  for (Monomial x : st.B) {
    if (x != b) gens.push_back(x);
  }
  if (gens.empty()) throw PreconditionError("I_b must be nonzero");
  const Ideal ib = minimalize(q.ambient(), gens);
  const Ideal jb = intersect(q.denominator(), ib);
  if (jb.contains(ib)) throw PreconditionError("I_b is contained in J");
  return QuotientPair(ib, jb, q.field());
}

std::optional<Monomial> HMap::operator()(Monomial x) const {
  const auto it = std::lower_bound(map.begin(), map.end(), x, [](const auto& e, Monomial key) { return e.first < key; });
  if (it == map.end() || it->first != x) return std::nullopt;
  return it->second;
}

bool HMap::is_excluded(Monomial x) const { return contains_sorted(excluded, x); }

std::vector<Monomial> HMap::image() const {
  std::vector<Monomial> out;
  for (const auto& e : map) out.push_back(e.second);
  std::sort(out.begin(), out.end());
  return out;
}

Monomial HMap::top_of(Monomial x) const {
  const Interval* iv = partition.find_containing(x);
  if (iv == nullptr) throw InvariantError(to_string(x) + " is not covered by P_b");
  return iv->hi;
}

std::vector<Monomial> HMap::path_nodes() const {
  std::vector<Monomial> out;
  for (const auto& e : map) {
    if (e.first.degree() == d + 1) out.push_back(e.first);
  }
  return out;
}

HMap build_h(const QuotientPair& q, Monomial b, const Partition& pb) {
  const StrataReport st = strata(q);
  const QuotientPair reduced = build_reduced_pair(q, b);
  const int k = st.d + 2;
  PartitionCheck check;
  try {
    check = verify_partition(reduced, pb);
  } catch (const MalformedIntervalError& e) {
    throw PreconditionError(std::string("P_b is malformed: ") + e.what());
  }
  if (!check) throw PreconditionError("P_b does not partition I_b/J_b: " + check.message);
  if (pb.sdepth_value() < k) throw PreconditionError("P_b has sdepth below d+2");

  HMap h;
  h.d = st.d;
  h.b = b;
  h.f1 = designated_generator(q, b);
  h.B = st.B;
  h.partition = normalize_partition(pb, k);
  if (!verify_partition(reduced, h.partition)) throw InvariantError("normalization broke P_b");

  h.excluded.push_back(b);
  for (Monomial f : st.f_list) {
    if (f == h.f1 || !reduced.in_poset(f)) continue;
    const Interval* iv = h.partition.find_by_lo(f);
    if (iv == nullptr || iv->hi.degree() != k) throw InvariantError("generator " + to_string(f) + " does not start an interval ending in C");
    GeneratorInterval g{f, iv->hi, {}};
    int found = 0;
    for (Monomial w : members(*iv)) {
      if (w.degree() == st.d + 1) g.middle[found++] = w;
    }
    std::sort(std::begin(g.middle), std::end(g.middle));
    h.generators.push_back(g);
    h.map.emplace_back(f, iv->hi);
    h.excluded.push_back(g.middle[0]);
    h.excluded.push_back(g.middle[1]);
  }
  std::sort(h.excluded.begin(), h.excluded.end());
  for (Monomial x : st.B) {
    if (h.is_excluded(x)) continue;
    const Interval* iv = h.partition.find_containing(x);
    if (iv == nullptr || iv->lo != x || iv->hi.degree() != k) {
      throw InvariantError(to_string(x) + " does not start its own interval ending in C");
    }
    h.map.emplace_back(x, iv->hi);
  }
  std::sort(h.map.begin(), h.map.end());
  std::vector<Monomial> img = h.image();
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) throw InvariantError("h is not injective");
  if (!q.normalization_warning() && static_cast<int>(img.size()) != st.s - st.r) {
    throw InvariantError("|Im h| = " + std::to_string(img.size()) + " differs from s - r = " + std::to_string(st.s - st.r));
  }
  return h;
}

namespace {

std::vector<Monomial> middles(const HMap& h) {
  std::vector<Monomial> out;
  for (const auto& g : h.generators) {
    out.push_back(g.middle[0]);
    out.push_back(g.middle[1]);
  }
  return out;
}

/// Path successors of x: B-divisors of h(x) outside the excluded set.
std::vector<Monomial> successors(const HMap& h, Monomial x) {
  std::vector<Monomial> out;
  const auto c = h(x);
  if (!c || h.b.divides(*c)) return out;
  for (Monomial y : h.B) {
    if (y != x && !h.is_excluded(y) && y.divides(*c)) out.push_back(y);
  }
  return out;
}

struct Bfs {
  std::vector<Monomial> order;
  std::map<Monomial, Monomial> parent;

  bool reached(Monomial x) const { return parent.count(x) != 0; }

  std::vector<Monomial> path_to(Monomial x) const {
    std::vector<Monomial> out{x};
    while (parent.at(out.back()) != out.back()) out.push_back(parent.at(out.back()));
    std::reverse(out.begin(), out.end());
    return out;
  }
};

Bfs bfs(const HMap& h, Monomial start, const std::vector<Monomial>& blocked) {
  Bfs res;
  if (contains_sorted(blocked, start)) return res;
  res.parent.emplace(start, start);
  res.order.push_back(start);
  for (std::size_t i = 0; i < res.order.size(); ++i) {
    for (Monomial y : successors(h, res.order[i])) {
      if (res.reached(y) || contains_sorted(blocked, y)) continue;
      res.parent.emplace(y, res.order[i]);
      res.order.push_back(y);
    }
  }
  return res;
}

}  // namespace

PathReport find_paths(const HMap& h, Monomial start, std::size_t max_paths) {
  const std::vector<Monomial> nodes = h.path_nodes();
  if (!contains_sorted(nodes, start)) throw PreconditionError(to_string(start) + " cannot start a path");
  const std::vector<Monomial> us = middles(h);
  PathReport rep;

  const Bfs reach = bfs(h, start, {});
  rep.reachable = reach.order;
  std::sort(rep.reachable.begin(), rep.reachable.end());
  for (Monomial x : rep.reachable) {
    const Monomial c = *h(x);
    if (h.b.divides(c)) rep.any_bad = true;
    if (divisible_by_any(us, c)) rep.any_weak = true;
  }

  std::vector<Monomial> path{start};
  std::function<void()> extend = [&]() {
    const Monomial last = path.back();
    std::vector<Monomial> next;
    for (Monomial y : successors(h, last)) {
      if (std::find(path.begin(), path.end(), y) == path.end()) next.push_back(y);
    }
    if (next.empty()) {
      if (rep.paths.size() >= max_paths) throw BudgetExceeded("more than " + std::to_string(max_paths) + " maximal paths");
      Path p;
      p.nodes = path;
      p.bad = h.b.divides(*h(last));
      p.maximal = true;
      p.weak = std::any_of(path.begin(), path.end(), [&](Monomial a) { return divisible_by_any(us, *h(a)); });
      rep.paths.push_back(std::move(p));
      return;
    }
    for (Monomial y : next) {
      path.push_back(y);
      extend();
      path.pop_back();
    }
  };
  extend();
  return rep;
}

Partition rotate(const Partition& p, const std::vector<Interval>& removed, const std::vector<Interval>& added) {
  std::vector<Interval> kept = p.intervals();
  std::multiset<VarMask> before;
  for (const Interval& iv : removed) {
    const auto it = std::find(kept.begin(), kept.end(), iv);
    if (it == kept.end()) throw RotationError(to_string(iv) + " is not an interval of the partition");
    kept.erase(it);
    for (Monomial w : members(iv)) before.insert(w.mask());
  }
  std::multiset<VarMask> after;
  for (const Interval& iv : added) {
    if (!iv.lo.divides(iv.hi)) throw RotationError("illegal interval " + to_string(iv));
    for (Monomial w : members(iv)) {
      if (after.count(w.mask()) != 0) throw RotationError(to_string(w) + " would be covered twice");
      after.insert(w.mask());
    }
  }
  if (before != after) {
    for (VarMask m : before) {
      if (after.count(m) == 0) throw RotationError(to_string(Monomial::from_mask(m)) + " would be dropped by the rotation");
    }
    for (VarMask m : after) {
      if (before.count(m) == 0) throw RotationError(to_string(Monomial::from_mask(m)) + " would be added by the rotation");
    }
  }
  for (const Interval& iv : added) kept.push_back(iv);
  Partition out(std::move(kept));
  out.canonicalize();
  return out;
}

Partition rotate_path(const Partition& p, const std::vector<Monomial>& segment) {
  if (segment.empty()) return p;
  std::vector<Interval> removed;
  for (Monomial a : segment) {
    const Interval* iv = p.find_by_lo(a);
    if (iv == nullptr) throw RotationError(to_string(a) + " does not start an interval");
    removed.push_back(*iv);
  }
  std::vector<Interval> added;
  const std::size_t m = segment.size();
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (!segment[j + 1].divides(removed[j].hi)) {
      throw RotationError(to_string(segment[j + 1]) + " does not divide " + to_string(removed[j].hi));
    }
    added.push_back({segment[j + 1], removed[j].hi});
  }
  if (!segment.front().divides(removed.back().hi)) {
    throw RotationError(to_string(segment.front()) + " does not divide " + to_string(removed.back().hi));
  }
  added.push_back({segment.front(), removed.back().hi});
  return rotate(p, removed, added);
}

HMap normalize_star(const QuotientPair& q, const HMap& h, std::vector<StarSwap>* swaps) {
  HMap cur = h;
  const StrataReport st = strata(q);
  const std::size_t guard = 4 * st.B.size() + 4;
  for (std::size_t round = 0; round < guard; ++round) {
    bool changed = false;
    for (Monomial w : st.W_B) {
      const auto c = cur(w);
      if (!c || cur.is_excluded(w)) continue;
      for (const GeneratorInterval& g : cur.generators) {
        if (!g.f.divides(w)) continue;
        for (int side = 0; side < 2 && !changed; ++side) {
          if (!g.middle[side].divides(*c)) continue;
          const Monomial other = g.middle[1 - side];
          Partition next = rotate(cur.partition, {{w, *c}, {g.f, g.top}}, {{g.f, *c}, {other, g.top}});
          cur = build_h(q, h.b, next);
          if (swaps != nullptr) swaps->push_back({w, g.f});
          changed = true;
        }
        if (changed) break;
      }
      if (changed) break;
    }
    if (!changed) return cur;
  }
  throw InvariantError("property (*) normalization did not terminate");
}

namespace {

/// Shared machinery of the driver and the walk-through.
class Surgeon {
 public:
  Surgeon(const QuotientPair& q, Monomial b, const DriverOptions& options, DriverRun& run)
      : q_(q), st_(strata(q)), b_(b), f1_(designated_generator(q, b)), k_(st_.d + 2), options_(options), run_(run) {}

  std::optional<SurgeryOutcome> attempt(const HMap& h, Monomial a1) {
    log("a_1 = " + to_string(a1));
    const PathReport rep = find_paths(h, a1);
    log("T_1 = " + join(rep.reachable) + (rep.any_bad ? ", bad path" : "") + (rep.any_weak ? ", weak path" : ""));
    if (rep.any_bad) {
      label_ = "case3";
      return bad_case(h, a1);
    }
    if (rep.any_weak) {
      label_ = "case2";
      return weak_case(h, a1, {});
    }
    label_ = "case1";
    return finish(h, closure(h, rep.reachable));
  }

  /// Tries every start with the plain closure; used after the case analysis failed.
  std::optional<SurgeryOutcome> sweep(const HMap& h) {
    label_ = "fallback";
    for (Monomial x : h.path_nodes()) {
      if (auto out = finish(h, closure(h, {x}))) return out;
    }
    return std::nullopt;
  }

  std::optional<SurgeryOutcome> upgrade_directly() {
    const Decision dec = sdepth_at_least(q_, k_, options_.limits);
    if (const auto* p = std::get_if<Partition>(&dec)) {
      run_.solver_assisted = true;
      label_ = "fallback/solver";
      log("direct search found sdepth ≥ d+2");
      return UpgradedPartition{*p};
    }
    return std::nullopt;
  }

  const std::string& label() const { return label_; }

  void log(const std::string& line) {
    if (options_.trace) run_.trace.push_back(line);
  }
  void anomaly(const std::string& line) {
    run_.anomalies.push_back(line);
    log("anomaly: " + line);
  }

 private:
  /// Smallest T ⊇ seed closed under "B-divisors of the top of the interval containing x".
  std::vector<Monomial> closure(const HMap& h, const std::vector<Monomial>& seed) {
    std::vector<Monomial> t;
    std::deque<Monomial> queue;
    for (Monomial x : seed) {
      if (x == b_) continue;
      insert_sorted(t, x);
      queue.push_back(x);
    }
    while (!queue.empty()) {
      const Monomial x = queue.front();
      queue.pop_front();
      const Monomial top = h.top_of(x);
      if (b_.divides(top)) continue;
      for (Monomial y : h.B) {
        if (y == b_ || !y.divides(top) || contains_sorted(t, y)) continue;
        insert_sorted(t, y);
        queue.push_back(y);
      }
    }
    return t;
  }

  std::optional<SurgeryOutcome> lift(const Partition& p, const std::string& why) {
    Partition full = complete_with_singletons(q_, p, k_);
    full.canonicalize();
    const PartitionCheck check = verify_partition(q_, full);
    if (!check || full.sdepth_value() < k_) {
      anomaly("lift after " + why + " failed: " + (check ? "value below d+2" : check.message));
      return std::nullopt;
    }
    log("upgraded partition of I/J after " + why);
    return UpgradedPartition{full};
  }

  /// Replaces [lo, c] by [f1, c] and lifts to I/J.
  std::optional<SurgeryOutcome> swap_in_f1(const Partition& p, Monomial lo, Monomial c, const std::string& why) {
    if (!f1_.divides(lo) && !contains_sorted(st_.B, lo)) {
      anomaly(to_string(lo) + " is neither in (f_1) nor in B");
      return std::nullopt;
    }
    std::vector<Interval> ivs = p.intervals();
    const auto it = std::find(ivs.begin(), ivs.end(), Interval{lo, c});
    if (it == ivs.end()) {
      anomaly(to_string(Interval{lo, c}) + " is not an interval of the partition");
      return std::nullopt;
    }
    it->lo = f1_;
    log("replace " + to_string(Interval{lo, c}) + " by " + to_string(Interval{f1_, c}));
    return lift(Partition(std::move(ivs)), why);
  }

  std::optional<SurgeryOutcome> bad_case(const HMap& h0, Monomial start) {
    HMap h = h0;
    Bfs reach = bfs(h, start, {});
    std::vector<Monomial> seq;
    for (Monomial x : reach.order) {
      if (b_.divides(*h(x))) {
        seq = reach.path_to(x);
        break;
      }
    }
    log("bad path " + join(seq));
    for (std::size_t guard = 0; guard <= h.B.size(); ++guard) {
      const Monomial at = seq.back();
      const Monomial c = *h(at);
      const Monomial g = f1_.lcm(c.divided_by(b_));
      if (f1_.divides(at)) return swap_in_f1(h.partition, at, c, "bad path ending in (f_1)");
      if (const auto it = std::find(seq.begin(), seq.end(), g); it != seq.end()) {
        const std::vector<Monomial> cycle(it, seq.end());
        log("rotate " + join(cycle));
        const Partition rotated = rotate_path(h.partition, cycle);
        return swap_in_f1(rotated, g, c, "rotation onto f_1 x_l");
      }
      if (h.is_excluded(g) || !h(g)) {
        anomaly("f_1 x_l = " + to_string(g) + " lies in a generator interval");
        return std::nullopt;
      }
      std::vector<Monomial> blocked = seq;
      std::sort(blocked.begin(), blocked.end());
      const Bfs ext = bfs(h, g, blocked);
      // A path from g running back into the bad path closes a cycle.
      for (Monomial z : ext.order) {
        const Monomial hz = *h(z);
        if (b_.divides(hz)) continue;
        for (std::size_t v = 0; v < seq.size(); ++v) {
          if (!seq[v].divides(hz)) continue;
          std::vector<Monomial> cycle(seq.begin() + static_cast<std::ptrdiff_t>(v), seq.end());
          for (Monomial y : ext.path_to(z)) cycle.push_back(y);
          log("rotate " + join(cycle));
          const Partition rotated = rotate_path(h.partition, cycle);
          return swap_in_f1(rotated, g, c, "cycle through f_1 x_l");
        }
      }
      bool extended = false;
      for (Monomial z : ext.order) {
        if (b_.divides(*h(z))) {
          const std::vector<Monomial> more = ext.path_to(z);
          seq.insert(seq.end(), more.begin(), more.end());
          log("next bad path from " + to_string(g) + ": " + join(more));
          extended = true;
          break;
        }
      }
      if (extended) continue;
      const bool weak = std::any_of(ext.order.begin(), ext.order.end(),
                                    [&](Monomial z) { return divisible_by_any(middles(h), *h(z)); });
      if (weak) return weak_case(h, g, blocked);
      return finish(h, closure(h, ext.order));
    }
    anomaly("bad path chain did not terminate");
    return std::nullopt;
  }

  /// Case 2: a weak path from start (and no bad one). `context` holds path
  /// elements from earlier rounds.
  std::optional<SurgeryOutcome> weak_case(const HMap& h0, Monomial start, std::vector<Monomial> context) {
    HMap h = h0;
    for (std::size_t guard = 0; guard <= h.B.size(); ++guard) {
      const Bfs reach = bfs(h, start, context);
      std::vector<Monomial> path;
      for (Monomial x : reach.order) {
        if (divisible_by_any(middles(h), *h(x))) {
          path = reach.path_to(x);
          break;
        }
      }
      if (path.empty()) return finish(h, closure(h, with(reach.order, context)));
      if (std::any_of(reach.order.begin(), reach.order.end(), [&](Monomial z) { return b_.divides(*h(z)); })) {
        anomaly("bad path met inside the weak case");
      }
      const Monomial at = path.back();
      const Monomial ct = *h(at);
      // Generator interval whose middle divides c_t; prefer f_j | a_t.
      const GeneratorInterval* gen = nullptr;
      for (const auto& g : h.generators) {
        if (!g.middle[0].divides(ct) && !g.middle[1].divides(ct)) continue;
        if (gen == nullptr || (g.f.divides(at) && !gen->f.divides(at))) gen = &g;
      }
      const int side = gen->middle[0].divides(ct) ? 0 : 1;
      const Monomial u = gen->middle[side];
      const Monomial u_other = gen->middle[1 - side];
      const GeneratorInterval g = *gen;
      log("weak path " + join(path) + ", c_t in (" + to_string(u) + ")");

      const std::vector<Monomial> t1 = with(reach.order, context);
      if (g.f.divides(at)) return swap_generator(h, g, at, ct, u_other, t1, u);

      // An earlier a_v in (f_j) dividing c_t: rotate it onto c_t.
      for (std::size_t v = 0; v + 1 < path.size(); ++v) {
        if (!g.f.divides(path[v]) || !path[v].divides(ct)) continue;
        const std::vector<Monomial> cycle(path.begin() + static_cast<std::ptrdiff_t>(v), path.end());
        log("rotate " + join(cycle));
        const HMap rotated = build_h(q_, b_, rotate_path(h.partition, cycle));
        return swap_generator(rotated, g, path[v], ct, u_other, t1, u);
      }

      Monomial next;
      bool found = false;
      for (Monomial y : h.B) {
        if (y != u && g.f.divides(y) && y.divides(ct)) {
          next = y;
          found = true;
        }
      }
      if (!found || h.is_excluded(next) || !h(next)) {
        anomaly("no admissible a_{t+1} dividing " + to_string(ct));
        return std::nullopt;
      }
      std::vector<Monomial> blocked = with(path, context);
      const Bfs ext = bfs(h, next, blocked);
      for (Monomial z : ext.order) {
        const Monomial hz = *h(z);
        if (b_.divides(hz)) continue;
        for (std::size_t v = 0; v < path.size(); ++v) {
          if (!path[v].divides(hz)) continue;
          std::vector<Monomial> cycle(path.begin() + static_cast<std::ptrdiff_t>(v), path.end());
          for (Monomial y : ext.path_to(z)) cycle.push_back(y);
          log("rotate " + join(cycle));
          const HMap rotated = build_h(q_, b_, rotate_path(h.partition, cycle));
          return swap_generator(rotated, g, next, ct, u_other, t1, u);
        }
      }
      log("continue from a_{t+1} = " + to_string(next));
      context = blocked;
      start = next;
    }
    anomaly("weak path chain did not terminate");
    return std::nullopt;
  }

  /// [a, c], [f_j, c'_j] → [f_j, c], [u', c'_j], then close T ∪ {u}.
  std::optional<SurgeryOutcome> swap_generator(const HMap& h, const GeneratorInterval& g, Monomial a, Monomial c,
                                               Monomial u_other, const std::vector<Monomial>& t1, Monomial u) {
    Partition next;
    try {
      next = rotate(h.partition, {{a, c}, {g.f, g.top}}, {{g.f, c}, {u_other, g.top}});
    } catch (const RotationError& e) {
      anomaly(std::string("generator swap failed: ") + e.what());
      return std::nullopt;
    }
    log("replace " + to_string(Interval{a, c}) + ", " + to_string(Interval{g.f, g.top}) + " by " +
        to_string(Interval{g.f, c}) + ", " + to_string(Interval{u_other, g.top}));
    const HMap swapped = build_h(q_, b_, next);
    std::vector<Monomial> seed = t1;
    insert_sorted(seed, u);
    return finish(swapped, closure(swapped, seed));
  }

  static std::vector<Monomial> with(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Partition of I/(J, I') built from the P_b intervals meeting T, with
  /// uncovered generators f moved onto the top of some y ∈ T ∩ (f).
  std::optional<Partition> quotient_partition(const HMap& h, const std::vector<Monomial>& t, const QuotientPair& qq) {
    std::vector<Interval> family;
    for (Monomial x : t) {
      const Interval* iv = h.partition.find_containing(x);
      if (std::find(family.begin(), family.end(), *iv) == family.end()) family.push_back(*iv);
    }
    for (const Interval& iv : family) {
      for (Monomial w : members(iv)) {
        if (!qq.in_poset(w)) return std::nullopt;
      }
    }
    auto covered = [&](Monomial w) {
      return std::any_of(family.begin(), family.end(), [w](const Interval& iv) { return iv.contains(w); });
    };
    for (Monomial f : st_.f_list) {
      if (!qq.in_poset(f) || covered(f)) continue;
      bool placed = false;
      for (Monomial y : t) {
        if (!f.divides(y)) continue;
        const Interval cand{f, h.top_of(y)};
        const auto ms = members(cand);
        if (!std::all_of(ms.begin(), ms.end(), [&](Monomial w) { return qq.in_poset(w); })) continue;
        std::vector<Interval> next;
        bool ok = true;
        for (const Interval& iv : family) {
          bool meets = false;
          for (Monomial w : ms) meets = meets || iv.contains(w);
          if (!meets) {
            next.push_back(iv);
            continue;
          }
          // Whatever of iv is left over must be able to stand as singletons.
          for (Monomial w : members(iv)) {
            if (!cand.contains(w) && w.degree() < k_) ok = false;
          }
        }
        if (!ok) continue;
        next.push_back(cand);
        family = std::move(next);
        placed = true;
        break;
      }
      if (!placed) return std::nullopt;
    }
    Partition p = complete_with_singletons(qq, Partition(family), k_);
    p.canonicalize();
    if (!verify_partition(qq, p) || p.sdepth_value() < k_) return std::nullopt;
    return p;
  }

  /// Case 1 conclusion for a closed T: I' = (F', B \ T) for F' ⊆ {f_i}.
  std::optional<SurgeryOutcome> finish(const HMap& h, const std::vector<Monomial>& t) {
    if (t.empty()) return std::nullopt;
    log("closed T = " + join(t));
    std::vector<Monomial> g;
    for (Monomial x : h.B) {
      if (!contains_sorted(t, x)) g.push_back(x);
    }
    // Subsets of the generators, larger first.
    const std::size_t r = st_.f_list.size();
    std::vector<std::vector<Monomial>> subsets;
    for (VarMask mask = 0; mask < (VarMask{1} << r); ++mask) {
      std::vector<Monomial> s;
      for (std::size_t i = 0; i < r; ++i) {
        if ((mask >> i) & 1U) s.push_back(st_.f_list[i]);
      }
      subsets.push_back(s);
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    for (bool solver : {false, true}) {
      for (const auto& fs : subsets) {
        std::vector<Monomial> gens = fs;
        gens.insert(gens.end(), g.begin(), g.end());
        const Ideal sub = minimalize(q_.ambient(), gens);
        if (sub.is_zero() || sub == q_.numerator()) continue;
        const Ideal killed = sum(q_.denominator(), sub);
        if (killed.contains(q_.numerator())) continue;
        const QuotientPair qq(q_.numerator(), killed, q_.field());
        std::optional<Partition> qp;
        if (!solver) {
          qp = quotient_partition(h, t, qq);
        } else {
          const Decision dec = sdepth_at_least(qq, k_, options_.limits);
          if (const auto* p = std::get_if<Partition>(&dec)) qp = *p;
        }
        if (!qp) continue;
        if (auto out = conclude(sub, qq, *qp, solver)) return out;
      }
    }
    anomaly("no I' = (F', B \\ T) concludes for T = " + join(t));
    return std::nullopt;
  }

  std::optional<SurgeryOutcome> conclude(const Ideal& sub, const QuotientPair& qq, const Partition& qp, bool solver) {
    const Ideal den = intersect(q_.denominator(), sub);
    const QuotientPair inner(sub, den, q_.field());
    const Decision dec = sdepth_at_least(inner, k_, options_.limits);
    if (const auto* p = std::get_if<Partition>(&dec)) {
      std::vector<Interval> glued = qp.intervals();
      glued.insert(glued.end(), p->intervals().begin(), p->intervals().end());
      Partition full(std::move(glued));
      full.canonicalize();
      if (!verify_partition(q_, full) || full.sdepth_value() < k_) {
        anomaly("glued partition does not verify for I' = (" + to_string(sub) + ")");
        return std::nullopt;
      }
      if (solver) mark_solver();
      log("sdepth(I'/J') ≥ d+2 for I' = (" + to_string(sub) + "); glued partition of I/J");
      return UpgradedPartition{full};
    }
    const int qd = depth(qq).depth;
    if (qd < st_.d + 1) {
      log("I' = (" + to_string(sub) + ") rejected: depth I/(J,I') = " + std::to_string(qd));
      return std::nullopt;
    }
    if (solver) mark_solver();
    log("witness I' = (" + to_string(sub) + "), depth I/(J,I') = " + std::to_string(qd));
    return SubidealWitness{sub, den, qp, qd, std::get<Unsat>(dec)};
  }

  void mark_solver() {
    run_.solver_assisted = true;
    if (label_.find("/solver") == std::string::npos) label_ += "/solver";
  }

  const QuotientPair& q_;
  StrataReport st_;
  Monomial b_;
  Monomial f1_;
  int k_;
  DriverOptions options_;
  DriverRun& run_;
  std::string label_;
};

}  // namespace

Ml1Check check_ml1_hypotheses(const QuotientPair& q, Monomial b, const SearchLimits& limits) {
  const StrataReport st = strata(q);
  Ml1Check res;
  auto fail = [&](const char* clause) {
    if (res.failed.empty()) res.failed = clause;
  };
  res.r_is_two = st.r == 2;
  if (!res.r_is_two) fail("(1) r = 2");
  res.s_in_range = 4 <= st.s && st.s <= st.q + 2;
  if (!res.s_in_range) fail("(1) 4 <= s <= q + 2");

  res.c_contained = res.r_is_two && std::all_of(st.C.begin(), st.C.end(), [&](Monomial c) {
    const Monomial f1 = st.f_list[0];
    const Monomial f2 = st.f_list[1];
    if (f1.divides(c) && f2.divides(c)) return true;
    int e_count = 0;
    for (Monomial e : st.E) e_count += e.divides(c) ? 1 : 0;
    if (e_count >= 1 && (f1.divides(c) || f2.divides(c))) return true;
    return e_count >= 2;
  });
  if (!res.c_contained) fail("(2) C containment");

  res.b_admissible = contains_sorted(st.B, b) && res.r_is_two &&
                     std::count_if(st.f_list.begin(), st.f_list.end(), [b](Monomial f) { return f.divides(b); }) == 1;
  if (!res.b_admissible) fail("(3) b in (B ∩ (f1)) \\ (f2)");

  if (res.b_admissible) {
    try {
      const QuotientPair reduced = build_reduced_pair(q, b);
      const Decision dec = sdepth_at_least(reduced, st.d + 2, limits);
      if (const auto* p = std::get_if<Partition>(&dec)) {
        res.reduced_sdepth = true;
        res.pb = *p;
      }
    } catch (const PreconditionError&) {
      res.reduced_sdepth = false;
    }
  }
  if (!res.reduced_sdepth) fail("(3) sdepth(I_b/J_b) >= d+2");
  return res;
}

DriverRun ml1_driver(const QuotientPair& q, Monomial b, const DriverOptions& options) {
  const Ml1Check hyp = check_ml1_hypotheses(q, b, options.limits);
  if (!hyp.ok()) throw PreconditionError("hypothesis " + hyp.failed + " fails");
  DriverRun run;
  Surgeon s(q, b, options, run);
  const HMap h = build_h(q, b, *hyp.pb);
  s.log("P_b has " + std::to_string(h.partition.intervals().size()) + " intervals; excluded " + join(h.excluded));
  const std::vector<Monomial> starts = h.path_nodes();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (auto out = s.attempt(h, starts[i])) {
      if (const OutcomeCheck c = certify_outcome(q, *out, options.limits); !c.ok) {
        s.anomaly("outcome failed certification: " + c.message);
        continue;
      }
      run.outcome = std::move(out);
      run.route = s.label() + (i == 0 ? "" : "/backtrack");
      return run;
    }
  }
  s.anomaly("case analysis produced no certified outcome");
  if (auto out = s.sweep(h); out && certify_outcome(q, *out, options.limits).ok) {
    run.outcome = std::move(out);
    run.route = s.label();
    return run;
  }
  if (auto out = s.upgrade_directly()) {
    run.outcome = std::move(out);
    run.route = s.label();
  }
  return run;
}

DriverRun surgery_walk(const QuotientPair& q, Monomial b, const Partition& pb, const DriverOptions& options) {
  DriverRun run;
  Surgeon s(q, b, options, run);
  std::vector<StarSwap> swaps;
  const HMap h = normalize_star(q, build_h(q, b, pb), &swaps);
  for (const StarSwap& sw : swaps) s.log("(*) moved h(" + to_string(sw.w) + ") into the interval of " + to_string(sw.f));
  const std::vector<Monomial> starts = h.path_nodes();
  if (starts.empty()) {
    s.anomaly("no admissible a_1");
    return run;
  }
  if (auto out = s.attempt(h, starts.front())) {
    if (const OutcomeCheck c = certify_outcome(q, *out, options.limits); c.ok) {
      run.outcome = std::move(out);
      run.route = s.label();
    } else {
      s.anomaly("outcome failed certification: " + c.message);
    }
  }
  return run;
}

OutcomeCheck certify_outcome(const QuotientPair& q, const SurgeryOutcome& outcome, const SearchLimits& limits) {
  const StrataReport st = strata(q);
  const int k = st.d + 2;
  if (const auto* up = std::get_if<UpgradedPartition>(&outcome)) {
    const PartitionCheck check = verify_partition(q, up->partition);
    if (!check) return {false, "upgraded partition: " + check.message};
    if (up->partition.sdepth_value() < k) return {false, "upgraded partition has sdepth below d+2"};
    return {};
  }
  const auto& w = std::get<SubidealWitness>(outcome);
  if (w.ideal.is_zero()) return {false, "I' is zero"};
  if (!q.numerator().contains(w.ideal) || w.ideal == q.numerator()) return {false, "I' is not a proper subideal"};
  for (Monomial g : w.ideal.gens()) {
    if (!contains_sorted(st.f_list, g) && !contains_sorted(st.B, g)) {
      return {false, to_string(g) + " is neither a degree-d generator nor in B"};
    }
  }
  if (w.denominator != intersect(q.denominator(), w.ideal)) return {false, "J' differs from J ∩ I'"};
  const QuotientPair inner(w.ideal, w.denominator, q.field());
  if (std::holds_alternative<Partition>(sdepth_at_least(inner, k, limits))) return {false, "sdepth(I'/J') ≥ d+2"};
  const QuotientPair outer(q.numerator(), sum(q.denominator(), w.ideal), q.field());
  if (depth(outer).depth < st.d + 1) return {false, "depth I/(J,I') < d+1"};
  const PartitionCheck check = verify_partition(outer, w.quotient_partition);
  if (!check) return {false, "quotient partition: " + check.message};
  return {};
}

}  // namespace sdlab
