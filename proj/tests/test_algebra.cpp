#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/ideal.hpp"
#include "sdlab/io.hpp"

using namespace sdlab;

namespace {

Monomial mono(const char* text, int n = 6) { return parse_monomial(text, n); }
Ideal ideal(const char* text, int n = 6) { return parse_ideal(text, n); }

}  // namespace

TEST_CASE("monomial ordering and arithmetic") {
  CHECK(mono("x1*x2") < mono("x1*x3"));
  CHECK(mono("x1*x3") < mono("x2*x3"));
  CHECK(mono("x4") < mono("x1*x2"));
  CHECK(mono("1") < mono("x1"));
  CHECK(mono("x1*x2").lcm(mono("x2*x3")) == mono("x1*x2*x3"));
  CHECK(mono("x1*x2").gcd(mono("x2*x3")) == mono("x2"));
  CHECK(to_string(mono("x3*x1")) == "x1*x3");
  CHECK(to_string(Monomial{}) == "1");
  CHECK_THROWS_AS(parse_monomial("x7", 6), InputError);
  CHECK_THROWS_AS(parse_monomial("x1*x1", 6), InputError);
  CHECK_THROWS_AS(parse_monomial("y1", 6), InputError);
}

TEST_CASE("minimalize") {
  CHECK(minimalize(2, {mono("x1"), mono("x1*x2")}).gens() == std::vector<Monomial>{mono("x1")});
  CHECK(minimalize(4, {}).is_zero());
  CHECK(minimalize(4, {mono("x1*x2*x3*x4"), mono("x2*x3*x4")}).gens() == std::vector<Monomial>{mono("x2*x3*x4")});
  CHECK_THROWS_AS(minimalize(3, {mono("x4")}), InputError);
}

TEST_CASE("membership") {
  CHECK(member(ideal("x1*x2"), mono("x1*x2*x3")));
  CHECK_FALSE(member(ideal("x1"), Monomial{}));
  const QuotientPair ex1 = corpus_instance("ex1");
  CHECK(member(ex1.numerator(), parse_monomial("x2*x3*x4*x5", 5)));
}

TEST_CASE("colon, intersection, sum") {
  CHECK(colon_var(ideal("x1"), 2) == ideal("x1"));
  CHECK(colon_var(ideal("x1*x2, x2*x3, x3*x4"), 2) == ideal("x1, x3"));
  CHECK(colon_var(ideal("x1*x2"), 1) == ideal("x2"));
  CHECK(intersect(ideal("x1"), ideal("x2")) == ideal("x1*x2"));
  CHECK(intersect(ideal("x1*x2, x3*x4"), ideal("x2*x3")) == ideal("x2*x3*x4, x1*x2*x3"));
  CHECK(intersect(ideal("x1"), Ideal(6)).is_zero());
  CHECK(sum(ideal("x1"), ideal("x1*x2")) == ideal("x1"));
  CHECK(sum(Ideal(6), ideal("x1*x2, x3")) == ideal("x1*x2, x3"));

  const QuotientPair bad = corpus_instance("bad");
  const Ideal prime = ideal("x1*x4, x4*x5, x5*x6");
  const Ideal joined = sum(bad.denominator(), prime);
  // x1*x4 is new; x4*x5 and x5*x6 are new and absorb the degree-3 multiples.
  CHECK(joined == ideal("x1*x4, x4*x5, x5*x6, x2*x4, x3*x4, x1*x6, x2*x6, x3*x6"));
}

TEST_CASE("ideal operations agree with set semantics on random input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Ideal a = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 4), 1, n);
    const Ideal b = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 4), 1, n);
    const int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const Ideal meet = intersect(a, b);
    const Ideal join = sum(a, b);
    const Ideal colon = colon_var(a, j);
    const auto ga = oracle::masks(a);
    const auto gb = oracle::masks(b);
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      const Monomial mm = Monomial::from_mask(m);
      CHECK(member(meet, mm) == (oracle::in_ideal(ga, m) && oracle::in_ideal(gb, m)));
      CHECK(member(join, mm) == (oracle::in_ideal(ga, m) || oracle::in_ideal(gb, m)));
      CHECK(member(colon, mm) == oracle::in_ideal(ga, m | (1U << (j - 1))));
    }
    CHECK(minimalize(n, meet.gens()) == meet);
    std::vector<Monomial> reversed(join.gens().rbegin(), join.gens().rend());
    CHECK(minimalize(n, reversed) == join);
  }
}

TEST_CASE("quotient pairs") {
  const Ideal i = ideal("x1", 2);
  CHECK(form_quotient(i, Ideal(2)).denominator().is_zero());
  CHECK_THROWS_AS(form_quotient(i, i), EmptyQuotientError);
  CHECK_THROWS_AS(QuotientPair(i, ideal("x2", 2)), InputError);
  CHECK_THROWS_AS(form_quotient(Ideal(2), i), InputError);
  CHECK_THROWS_AS(QuotientPair(i, Ideal(3)), InputError);

  const Ideal ex1_i = parse_ideal("x1*x2, x1*x3, x1*x4, x2*x3*x5", 5);
  const QuotientPair ex1 = form_quotient(ex1_i, parse_ideal("x2*x3*x4*x5", 5));
  CHECK(ex1.denominator() == corpus_instance("ex1").denominator());
  CHECK_FALSE(ex1.normalization_warning());
  CHECK(QuotientPair(ideal("x1, x2", 3), ideal("x1*x2", 3)).normalization_warning() == false);
  CHECK(QuotientPair(ideal("x1*x2, x3", 3), ideal("x3", 3)).normalization_warning());
  CHECK_THROWS_AS(Field(4), InputError);
  CHECK(Field(32003).characteristic() == 32003);
}

TEST_CASE("input format") {
  const QuotientPair q = parse_input("# toy\nn=2\nI = x1\nJ = 0\n");
  CHECK(q.ambient() == 2);
  CHECK(parse_input(serialize_input(q)).numerator() == q.numerator());
  CHECK_THROWS_AS(parse_input("n=2\nI = x1\nJ = x2\n"), InputError);
  CHECK_THROWS_AS(parse_input("n=2\nI = x1\nJ = x1\n"), EmptyQuotientError);
  CHECK_THROWS_AS(parse_input("n=17\nI = x1\n"), ParseError);
  CHECK_THROWS_AS(parse_input("n=0\nI = x1\n"), ParseError);
  try {
    parse_input("n=3\nI = x1, x2*y3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
  for (const auto& inst : corpus_instances()) {
    const QuotientPair p = parse_input(inst.text);
    const QuotientPair again = parse_input(serialize_input(p));
    CHECK(again.numerator() == p.numerator());
    CHECK(again.denominator() == p.denominator());
  }
}
