#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/depth.hpp"
#include "sdlab/generators.hpp"
#include "sdlab/io.hpp"
#include "sdlab/poset.hpp"
#include "sdlab/surgery.hpp"

using namespace sdlab;

namespace {

constexpr int kN = 6;

Monomial m(const char* text) { return parse_monomial(text, kN); }
Interval iv(const char* lo, const char* hi) { return {m(lo), m(hi)}; }

Partition listed_pb() {
  return Partition({iv("x2", "x1*x2*x3"), iv("x3", "x1*x3*x5"), iv("x1*x5", "x1*x2*x5"), iv("x2*x5", "x2*x3*x5"),
                    iv("x4*x5", "x1*x4*x5"), iv("x5*x6", "x4*x5*x6"), iv("x1*x2*x3*x5", "x1*x2*x3*x5")});
}

}  // namespace

TEST_CASE("reduced pair of bad") {
  const QuotientPair bad = corpus_instance("bad");
  const Monomial b = m("x1*x4");
  CHECK(designated_generator(bad, b) == m("x1"));
  const QuotientPair reduced = build_reduced_pair(bad, b);
  CHECK(reduced.numerator() == parse_ideal("x2, x3, x1*x5, x4*x5, x5*x6", kN));
  CHECK_FALSE(reduced.numerator().contains(b));
  CHECK(reduced.denominator() == intersect(bad.denominator(), reduced.numerator()));
  CHECK_THROWS_AS(build_reduced_pair(bad, m("x1*x2*x3")), InputError);

  const QuotientPair toy(parse_ideal("x1", 2), Ideal(2));
  CHECK_THROWS_AS(build_reduced_pair(toy, parse_monomial("x1*x2", 2)), PreconditionError);
}

TEST_CASE("h on the listed partition") {
  const QuotientPair bad = corpus_instance("bad");
  const Monomial b = m("x1*x4");
  const Partition pb = listed_pb();
  const QuotientPair reduced = build_reduced_pair(bad, b);
  CHECK(verify_partition(reduced, pb).ok);
  CHECK(pb.sdepth_value() == 3);

  const HMap h = build_h(bad, b, pb);
  CHECK(h(m("x2")) == m("x1*x2*x3"));
  CHECK(h(m("x1*x5")) == m("x1*x2*x5"));
  CHECK(h(m("x2*x5")) == m("x2*x3*x5"));
  CHECK(h(m("x4*x5")) == m("x1*x4*x5"));
  CHECK(h(m("x5*x6")) == m("x4*x5*x6"));
  CHECK(h(m("x3")) == m("x1*x3*x5"));
  CHECK_FALSE(h(b).has_value());
  const StrataReport st = strata(bad);
  CHECK(static_cast<int>(h.image().size()) == st.s - st.r);
  CHECK(static_cast<int>(h.image().size()) <= st.q);

  // A partition of the wrong module is refused.
  Partition broken = pb;
  broken.intervals().pop_back();
  CHECK_THROWS_AS(build_h(bad, b, broken), PreconditionError);
}

TEST_CASE("paths on bad") {
  const QuotientPair bad = corpus_instance("bad");
  const HMap h = build_h(bad, m("x1*x4"), listed_pb());
  const PathReport rep = find_paths(h, m("x1*x5"));
  REQUIRE(rep.paths.size() == 1);
  CHECK(rep.paths[0].nodes == std::vector<Monomial>{m("x1*x5"), m("x2*x5")});
  CHECK(rep.paths[0].maximal);
  CHECK(rep.paths[0].weak);
  CHECK_FALSE(rep.paths[0].bad);
  CHECK(rep.reachable == std::vector<Monomial>{m("x1*x5"), m("x2*x5")});
  CHECK(rep.any_weak);
  CHECK_FALSE(rep.any_bad);

  // h(x4*x5) = x1*x4*x5 ∈ (b): a one-element bad path.
  const PathReport single = find_paths(h, m("x4*x5"));
  REQUIRE(single.paths.size() == 1);
  CHECK(single.paths[0].nodes.size() == 1);
  CHECK(single.paths[0].bad);

  CHECK_THROWS_AS(find_paths(h, m("x1*x2")), PreconditionError);
}

TEST_CASE("rotations") {
  const QuotientPair bad = corpus_instance("bad");
  const QuotientPair reduced = build_reduced_pair(bad, m("x1*x4"));
  const Partition pb = listed_pb();

  Partition same = rotate_path(pb, {m("x1*x5")});
  same.canonicalize();
  Partition sorted = pb;
  sorted.canonicalize();
  CHECK(same.intervals() == sorted.intervals());

  const Partition swapped = rotate(pb, {iv("x2", "x1*x2*x3"), iv("x2*x5", "x2*x3*x5")},
                                   {iv("x2", "x2*x3*x5"), iv("x1*x2", "x1*x2*x3")});
  CHECK(verify_partition(reduced, swapped).ok);
  CHECK(swapped.sdepth_value() == 3);
  CHECK(swapped.find_by_lo(m("x2"))->hi == m("x2*x3*x5"));

  CHECK_THROWS_AS(rotate(pb, {iv("x2", "x1*x2*x3")}, {iv("x2", "x2*x3*x5")}), RotationError);
  CHECK_THROWS_AS(rotate(pb, {iv("x2", "x2*x3")}, {}), RotationError);
  CHECK_THROWS_AS(rotate_path(pb, {m("x1*x5"), m("x4*x5")}), RotationError);
}

TEST_CASE("walk through bad") {
  const QuotientPair bad = corpus_instance("bad");
  const DriverRun run = surgery_walk(bad, m("x1*x4"), listed_pb(), {{}, true});
  REQUIRE(run.outcome.has_value());
  REQUIRE(std::holds_alternative<SubidealWitness>(*run.outcome));
  const auto& w = std::get<SubidealWitness>(*run.outcome);
  CHECK(w.ideal == parse_ideal("x1*x4, x4*x5, x5*x6", kN));
  CHECK(w.quotient_depth >= 2);
  CHECK(run.route == "case2");
  CHECK(certify_outcome(bad, *run.outcome).ok);
  bool swap_logged = false;
  for (const auto& line : run.trace) {
    swap_logged = swap_logged || line.find("[x2, x2*x3*x5], [x1*x2, x1*x2*x3]") != std::string::npos;
  }
  CHECK(swap_logged);

  // sdepth(I'/J') ≤ 2 by brute force, and the Depth Lemma then caps depth I/J.
  const QuotientPair inner(w.ideal, w.denominator);
  CHECK(oracle::sdepth(inner) <= 2);
  CHECK(depth(bad).depth <= 2);
}

TEST_CASE("ml1 driver preconditions") {
  CHECK_THROWS_AS(ml1_driver(corpus_instance("bad"), m("x1*x4")), PreconditionError);
  const Ml1Check c = check_ml1_hypotheses(corpus_instance("bad"), m("x1*x4"));
  CHECK_FALSE(c.r_is_two);
  CHECK(c.failed == "(1) r = 2");
}

TEST_CASE("ml1 driver on generated r = 2 instances") {
  std::mt19937_64 rng(20261015);
  int ran = 0;
  int outcomes = 0;
  for (int iter = 0; iter < 3000 && ran < 30; ++iter) {
    const auto cand = random_ml1_candidate(rng, 5 + static_cast<int>(rng() % 2));
    if (!cand || !check_ml1_hypotheses(cand->pair, cand->b).ok()) continue;
    ++ran;
    const QuotientPair& q = cand->pair;
    CAPTURE(serialize_input(q));
    CAPTURE(to_string(cand->b));
    const DriverRun run = ml1_driver(q, cand->b);
    const int d = strata(q).d;
    if (run.outcome) {
      ++outcomes;
      CHECK(certify_outcome(q, *run.outcome).ok);
      if (std::holds_alternative<UpgradedPartition>(*run.outcome)) CHECK(oracle::sdepth(q) >= d + 2);
    } else {
      // No outcome is only acceptable as a logged finding; the disjunction itself
      // is then checked by brute force on the sdepth side.
      CHECK_FALSE(run.anomalies.empty());
    }
  }
  CHECK(ran >= 10);
  MESSAGE("ml1 instances: " << ran << ", certified outcomes: " << outcomes);
}
