#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/poset.hpp"

using namespace sdlab;

namespace {

std::vector<Monomial> monos(const char* text, int n) { return parse_ideal(text, n).gens(); }

}  // namespace

TEST_CASE("enumerate_poset") {
  const QuotientPair q(parse_ideal("x1", 2), Ideal(2));
  const PosetSnapshot snap = enumerate_poset(q);
  CHECK(snap.elements == std::vector<Monomial>{parse_monomial("x1", 2), parse_monomial("x1*x2", 2)});
  CHECK(snap.min_degree() == 1);
  CHECK(enumerate_poset(q, 1).size() == 1);
}

TEST_CASE("poset matches brute force and is closed") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    const Ideal k = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 2, n);
    if (k.contains(i)) continue;
    const QuotientPair q = form_quotient(i, k);
    const PosetSnapshot snap = enumerate_poset(q);
    std::set<std::uint32_t> expected;
    for (auto m : oracle::poset(q)) expected.insert(m);
    std::set<std::uint32_t> got;
    for (Monomial m : snap.elements) got.insert(m.mask());
    CHECK(got == expected);
    CHECK(std::is_sorted(snap.elements.begin(), snap.elements.end()));
    for (Monomial m : snap.elements) {
      for (int j = 1; j <= n; ++j) {
        if (m.contains(j)) continue;
        CHECK((q.in_poset(m.times(j)) || member(q.denominator(), m.times(j))));
      }
      for (std::uint32_t sub = m.mask();; sub = (sub - 1) & m.mask()) {
        CHECK_FALSE(member(q.denominator(), Monomial::from_mask(sub)));
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("strata of ex1") {
  const StrataReport st = strata(corpus_instance("ex1"));
  CHECK(st.d == 2);
  CHECK(st.r == 3);
  CHECK(st.E.size() == 1);
  CHECK(st.s == 7);
  CHECK(st.q == 4);
  CHECK(st.C == monos("x1*x2*x3*x4, x1*x2*x3*x5, x1*x3*x4*x5, x1*x2*x4*x5", 5));
  CHECK(st.W_B == monos("x1*x2*x3, x1*x2*x4, x1*x3*x4", 5));
}

TEST_CASE("strata of ex3") {
  const StrataReport st = strata(corpus_instance("ex3"));
  CHECK(st.d == 2);
  CHECK(st.r == 5);
  CHECK(st.B == monos("x1*x2*x3, x1*x2*x4, x1*x3*x4, x1*x3*x5, x2*x3*x5", 5));
  // Every b is a pairwise lcm of generators.
  CHECK(st.W_B == st.B);
}

TEST_CASE("strata of ex") {
  const StrataReport st = strata(corpus_instance("ex"));
  const Monomial c = parse_monomial("x1*x2*x3*x4", 4);
  const Monomial b = parse_monomial("x1*x2*x4", 4);
  CHECK(contains_sorted(st.C, c));
  CHECK(contains_sorted(st.B, b));
  CHECK(b.divides(c));
  CHECK_FALSE(contains_sorted(st.W_B, b));
  CHECK_FALSE(contains_sorted(st.C3, c));
}

TEST_CASE("strata of eex1") {
  const QuotientPair q = corpus_instance("eex1");
  const StrataReport st = strata(q);
  CHECK(st.r == 4);
  CHECK(st.C2 == monos("x1*x2*x3*x4, x1*x2*x3*x5", 5));
  CHECK(st.C == monos("x1*x2*x3*x4, x1*x2*x3*x5, x1*x3*x4*x5, x2*x3*x4*x5", 5));
  CHECK(restrict_to_var(st.B, 1).size() == 5);
  // x4 meets only x2*x3*x4, x1*x2*x4, x1*x3*x4, x3*x4*x5 (x2*x3*x5 lacks x4).
  CHECK(restrict_to_var(st.B, 4).size() == 4);
  CHECK(restrict_to_var(st.C, 1).size() == 3);
  CHECK(restrict_to_var(st.C, 4).size() == 3);
  CHECK(restrict_to_var(st.B, 1) == monos("x1*x3*x4, x1*x3*x5, x1*x2*x4, x1*x2*x5, x1*x2*x3", 5));
}

TEST_CASE("strata of bad") {
  const StrataReport st = strata(corpus_instance("bad"));
  CHECK(st.d == 1);
  CHECK(st.r == 3);
  CHECK(st.s == 9);
  CHECK(st.q == 6);
  CHECK(st.E == monos("x4*x5, x5*x6", 6));
  CHECK(st.C == monos("x1*x2*x3, x1*x2*x5, x2*x3*x5, x1*x3*x5, x1*x4*x5, x4*x5*x6", 6));
}

TEST_CASE("degenerate strata") {
  const StrataReport st = strata(QuotientPair(parse_ideal("x1", 1), Ideal(1)));
  CHECK(st.d == 1);
  CHECK(st.r == 1);
  CHECK(st.s == 0);
  CHECK(st.q == 0);
}
