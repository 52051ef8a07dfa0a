#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/poset.hpp"
#include "sdlab/sdepth.hpp"

using namespace sdlab;

namespace {

Interval iv(const char* lo, const char* hi, int n) { return {parse_monomial(lo, n), parse_monomial(hi, n)}; }

}  // namespace

TEST_CASE("verify_partition") {
  const QuotientPair q(parse_ideal("x1", 2), Ideal(2));
  const Partition good({iv("x1", "x1*x2", 2)});
  CHECK(verify_partition(q, good).ok);
  CHECK(good.sdepth_value() == 2);
  const PartitionCheck empty = verify_partition(q, Partition{});
  CHECK_FALSE(empty.ok);
  CHECK(empty.problem == CoverProblem::kMissing);
  CHECK_THROWS_AS(verify_partition(q, Partition({iv("x2", "x1", 2)})), MalformedIntervalError);

  // a = x2*x3*x5, c = x1x2x3x4, c1 = x1x2x3x5, c2 = x1x3x4x5, c3 = x1x2x4x5.
  const QuotientPair ex1 = corpus_instance("ex1");
  const Partition attempt({iv("x2*x3*x5", "x1*x2*x3*x5", 5), iv("x1*x2", "x1*x2*x3*x4", 5),
                           iv("x1*x3", "x1*x3*x4*x5", 5), iv("x1*x4", "x1*x2*x4*x5", 5)});
  const PartitionCheck check = verify_partition(ex1, attempt);
  CHECK_FALSE(check.ok);
  CHECK(check.problem == CoverProblem::kDoubleCovered);
  CHECK(check.offending == parse_monomial("x1*x2*x4", 5));
}

TEST_CASE("sdepth_decide on ex1") {
  const QuotientPair ex1 = corpus_instance("ex1");
  const Decision four = sdepth_decide(ex1, 4);
  CHECK(std::holds_alternative<Unsat>(four));
  const Decision three = sdepth_decide(ex1, 3);
  REQUIRE(std::holds_alternative<Partition>(three));
  const Partition& cert = std::get<Partition>(three);
  CHECK(verify_partition(ex1, cert).ok);
  CHECK(cert.sdepth_value() >= 3);
  CHECK_THROWS_AS(sdepth_decide(ex1, 1), InputError);
  CHECK_THROWS_AS(sdepth_decide(ex1, 6), InputError);
}

TEST_CASE("sdepth values") {
  const QuotientPair toy(parse_ideal("x1", 2), Ideal(2));
  const Decision d = sdepth_decide(toy, 2);
  REQUIRE(std::holds_alternative<Partition>(d));
  CHECK(std::get<Partition>(d).intervals() == std::vector<Interval>{iv("x1", "x1*x2", 2)});

  const SdepthResult ex1 = sdepth(corpus_instance("ex1"));
  CHECK(ex1.value == 3);
  REQUIRE(ex1.refutation.has_value());
  CHECK(ex1.refutation->k == 4);

  CHECK(sdepth(corpus_instance("bad")).value == 2);
  CHECK(sdepth(QuotientPair(Ideal::maximal(3), Ideal(3))).value == 2);
  CHECK(sdepth(QuotientPair(Ideal::maximal(3), Ideal(3))).value == oracle::sdepth(QuotientPair(Ideal::maximal(3), Ideal(3))));
}

TEST_CASE("sdepth matches exhaustive enumeration") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 150) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    const Ideal k = oracle::random_ideal(rng, n, static_cast<int>(rng() % 3), 2, n);
    if (k.contains(i)) continue;
    const QuotientPair q = form_quotient(i, k);
    if (oracle::poset(q).size() > 12) continue;
    const SdepthResult r = sdepth(q);
    CHECK(r.value == oracle::sdepth(q));
    CHECK(verify_partition(q, r.certificate).ok);
    CHECK(r.certificate.sdepth_value() >= r.value);
    CHECK(r.value >= strata(q).d);
    ++checked;
  }
}

TEST_CASE("normalization helpers") {
  const QuotientPair q(Ideal::maximal(3), Ideal(3));
  const Partition wide({iv("x1", "x1*x2*x3", 3), iv("x2", "x2*x3", 3), iv("x3", "x3", 3)});
  CHECK(verify_partition(q, wide).ok);
  const Partition norm = normalize_partition(wide, 2);
  CHECK(verify_partition(q, norm).ok);
  for (const Interval& x : norm.intervals()) {
    if (x.lo.degree() < 2) CHECK(x.hi.degree() <= 2);
  }
  const Partition partial({iv("x1", "x1*x2", 3), iv("x2", "x2*x3", 3), iv("x3", "x1*x3", 3)});
  const Partition full = complete_with_singletons(q, partial, 2);
  CHECK(verify_partition(q, full).ok);
  CHECK(full.intervals().size() == 4);
}

TEST_CASE("Stanley decomposition export") {
  const QuotientPair toy(parse_ideal("x1", 2), Ideal(2));
  const auto spaces = export_stanley_decomposition(toy, Partition({iv("x1", "x1*x2", 2)}));
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].generator == parse_monomial("x1", 2));
  CHECK(spaces[0].variables == parse_monomial("x1*x2", 2));
  CHECK_THROWS_AS(export_stanley_decomposition(toy, Partition{}), PreconditionError);

  const QuotientPair ex1 = corpus_instance("ex1");
  const SdepthResult r = sdepth(ex1);
  const auto ex1_spaces = export_stanley_decomposition(ex1, r.certificate);
  CHECK(ex1_spaces.size() == r.certificate.intervals().size());
  int min_dim = 99;
  for (const auto& sp : ex1_spaces) min_dim = std::min(min_dim, sp.variables.degree());
  CHECK(min_dim == 3);

  const Partition single({iv("x1*x2", "x1*x2", 2)});
  const auto one = export_stanley_decomposition(QuotientPair(parse_ideal("x1*x2", 2), Ideal(2)), single);
  CHECK(one[0].variables == parse_monomial("x1*x2", 2));
}
