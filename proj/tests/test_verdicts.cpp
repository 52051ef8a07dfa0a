#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/depth.hpp"
#include "sdlab/generators.hpp"
#include "sdlab/io.hpp"
#include "sdlab/verdicts.hpp"

using namespace sdlab;

namespace {

const Verdict& find(const std::vector<Verdict>& vs, const std::string& rule) {
  for (const Verdict& v : vs) {
    if (v.rule == rule) return v;
  }
  FAIL("missing rule " << rule);
  return vs.front();
}

}  // namespace

TEST_CASE("verdicts on ex1") {
  const QuotientPair ex1 = corpus_instance("ex1");
  const auto vs = bounds_report(ex1);
  const Verdict& main = find(vs, "conjecture_r_at_most_3");
  CHECK(main.applicable);
  CHECK(main.bound == 3);
  CHECK(main.observed == 3);
  CHECK(main.consistent);
  CHECK(all_consistent(vs));
  // s = 7 is neither above q + r = 7 nor below 2r = 6.
  CHECK_FALSE(find(vs, "excess_b_over_c").applicable);
  CHECK_FALSE(find(vs, "few_b").applicable);
  CHECK(find(vs, "depth_lower_bound").applicable);
  CHECK(vs.size() == 12);
}

TEST_CASE("colon modules of eex1") {
  const QuotientPair eex1 = corpus_instance("eex1");
  for (int t : {1, 4}) {
    CAPTURE(t);
    const Ideal xt = Ideal::principal(5, Monomial::variable(t));
    const QuotientPair u = form_quotient(intersect(eex1.numerator(), xt), eex1.denominator());
    const auto vs = bounds_report(u);
    const Verdict& card = find(vs, "excess_b_over_c_sdepth");
    if (t == 1) {
      CHECK(card.applicable);
      CHECK(card.bound == 3);
      CHECK(card.consistent);
    }
    // Only x1 gives the bound: |B∩(x4)| is 4, and U_4 has sdepth and depth 4.
    CHECK(oracle::sdepth(u) == (t == 1 ? 3 : 4));
    CHECK(depth(u).depth == (t == 1 ? 3 : 4));
    CHECK(all_consistent(vs));
  }
  CHECK(depth(eex1).depth <= 3);
}

TEST_CASE("d = 1 with B inside E and W") {
  const QuotientPair q(parse_ideal("x1, x2", 3), parse_ideal("x1*x3, x2*x3", 3));
  const auto vs = bounds_report(q);
  const Verdict& v = find(vs, "d1_b_in_e_or_w");
  CHECK(v.applicable);
  CHECK(v.bound == 1);
  CHECK(v.observed == 1);
  CHECK(depth(q).depth == 1);

  const QuotientPair wide(parse_ideal("x1, x2", 3), Ideal(3));
  CHECK_FALSE(find(bounds_report(wide), "d1_b_in_e_or_w").applicable);
}

TEST_CASE("degree-d divisors rule and its obstruction") {
  const QuotientPair ex = corpus_instance("ex");
  const Verdict& v = find(bounds_report(ex), "b_divisors_are_generators");
  CHECK_FALSE(v.applicable);
  const QuotientPair clean(parse_ideal("x1*x2, x1*x3, x2*x3", 3), Ideal(3));
  const Verdict& w = find(bounds_report(clean), "b_divisors_are_generators");
  CHECK(w.applicable);
  CHECK(w.consistent);
}

TEST_CASE("rules require normalization") {
  const QuotientPair skew(parse_ideal("x1*x2, x3", 3), parse_ideal("x3", 3));
  CHECK(skew.normalization_warning());
  for (const Verdict& v : bounds_report(skew)) {
    if (v.rule != "sdepth_at_most_hdepth") CHECK_FALSE(v.applicable);
  }
}

TEST_CASE("audits") {
  for (const char* name : {"ex3", "ex", "ex1", "eex1", "bad"}) {
    CAPTURE(name);
    const AuditRecord rec = consistency_audit(corpus_instance(name));
    CHECK(rec.ok());
    CHECK(rec.instance.empty());
    CHECK_FALSE(rec.checks.empty());
  }
  const QuotientPair free_module(Ideal::unit(3), Ideal(3));
  CHECK(consistency_audit(free_module).ok());

  // The witness subideal of bad caps depth at 2 through the depth lemma.
  const QuotientPair bad = corpus_instance("bad");
  const Ideal witness = parse_ideal("x1*x4, x4*x5, x5*x6", 6);
  const int left = module_depth(witness, intersect(bad.denominator(), witness), Field{});
  const int right = module_depth(bad.numerator(), sum(bad.denominator(), witness), Field{});
  CHECK(left <= 2);
  CHECK(right >= 2);
  CHECK(depth(bad).depth <= std::max(left, std::min(left, right)));
  CHECK(consistency_audit(bad, {witness}).ok());
}

TEST_CASE("random instances stay consistent") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const QuotientPair q = random_quotient(rng, 3 + i % 4);
    CAPTURE(serialize_input(q));
    const auto vs = bounds_report(q);
    CHECK(all_consistent(vs));
    CHECK(consistency_audit(q).ok());
    CHECK(find(vs, "sdepth_at_most_hdepth").consistent);
  }
}
