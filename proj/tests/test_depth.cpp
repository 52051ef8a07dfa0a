#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/depth.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

using namespace sdlab;

TEST_CASE("exact rank") {
  IntMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 1;
  m(1, 1) = 1; m(1, 2) = 1;
  m(2, 0) = 1; m(2, 2) = -1;
  CHECK(exact_rank(m, Field(0)) == 2);
  m(2, 2) = 1;
  CHECK(exact_rank(m, Field(0)) == 3);
  CHECK(exact_rank(m, Field(2)) == 2);
  CHECK(exact_rank(IntMatrix(0, 4), Field(0)) == 0);

  // Entries grow past 64 bits under fraction-free elimination.
  IntMatrix big(12, 12);
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) big(i, j) = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
  }
  for (std::size_t j = 0; j < 12; ++j) big(11, j) = big(0, j) + big(1, j);
  CHECK(exact_rank(big, Field(0)) == 11);
}

TEST_CASE("koszul components") {
  const QuotientPair x1(parse_ideal("x1", 1), Ideal(1));
  const KoszulDegreeReport r = koszul_component(x1, parse_monomial("x1", 1));
  CHECK(r.betti[0] == 1);
  for (std::size_t i = 1; i < r.betti.size(); ++i) CHECK(r.betti[i] == 0);

  const QuotientPair free2(parse_ideal("x1", 2), Ideal(2));
  const KoszulDegreeReport f = koszul_component(free2, parse_monomial("x1*x2", 2));
  for (std::size_t i = 1; i < f.betti.size(); ++i) CHECK(f.betti[i] == 0);
}

TEST_CASE("depth of corpus instances") {
  CHECK(depth(corpus_instance("ex3")).depth == 3);
  CHECK(depth(corpus_instance("ex3", Field(2))).depth == 3);
  CHECK(depth(corpus_instance("ex1")).depth == 3);
  CHECK(depth(corpus_instance("bad")).depth == 2);
  CHECK(depth(QuotientPair(parse_ideal("x1", 2), Ideal(2))).depth == 2);

  const DepthResult ex3 = depth(corpus_instance("ex3"));
  CHECK(ex3.pd == 2);
  CHECK(ex3.depth + ex3.pd == 5);
  CHECK(koszul_component(corpus_instance("ex3"), ex3.witness_degree).betti[2] != 0);
}

TEST_CASE("paranoid scan agrees") {
  for (const char* name : {"ex3", "ex", "ex1", "eex1"}) {
    const QuotientPair q = corpus_instance(name);
    CHECK(depth(q, {.paranoid = true}).depth == depth(q).depth);
  }
}

TEST_CASE("reduced homology") {
  // Circle: boundary of a triangle.
  std::vector<Monomial> circle;
  for (const char* f : {"1", "x1", "x2", "x3", "x1*x2", "x2*x3", "x1*x3"}) circle.push_back(parse_monomial(f, 3));
  const auto h = reduced_homology(circle, Field(0));
  REQUIRE(h.size() >= 3);
  CHECK(h[0] == 0);
  CHECK(h[1] == 0);
  CHECK(h[2] == 1);
  const auto empty = reduced_homology({Monomial{}}, Field(0));
  CHECK(empty[0] == 1);
}

TEST_CASE("Reisner oracle on small ideals") {
  CHECK(reisner_depth_oracle(parse_ideal("x1", 1), Field(0)) == 0);
  CHECK(reisner_depth_oracle(parse_ideal("x1*x2", 2), Field(0)) == 1);
  CHECK_THROWS_AS(reisner_depth_oracle(Ideal(2), Field(0)), InputError);
  CHECK_THROWS_AS(reisner_depth_oracle(Ideal::unit(2), Field(0)), InputError);
}

TEST_CASE("projective plane depends on the characteristic") {
  const Ideal i = rp2_ideal();
  const QuotientPair q = corpus_instance("rp2");
  CHECK(depth(q).depth == 3);
  CHECK(depth(q.with_field(Field(2))).depth == 2);
  CHECK(reisner_depth_oracle(i, Field(0)) == 3);
  CHECK(reisner_depth_oracle(i, Field(2)) == 2);
  CHECK(6 - hochster_projective_dimension(i, Field(0)) == 3);
  CHECK(6 - hochster_projective_dimension(i, Field(2)) == 2);
  CHECK(depth(q.with_field(Field(3))).depth == 3);
}

TEST_CASE("Koszul depth matches the simplicial oracles on random S/I") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 4), 1, n);
    if (i.is_unit()) continue;
    const QuotientPair q(Ideal::unit(n), i);
    for (int p : {0, 2}) {
      const int k = depth(q.with_field(Field(p))).depth;
      CHECK(k == reisner_depth_oracle(i, Field(p)));
      CHECK(k == n - hochster_projective_dimension(i, Field(p)));
    }
  }
}

TEST_CASE("depth bounds on random quotients") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    const Ideal k = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 2, n);
    if (k.contains(i)) continue;
    const QuotientPair q = form_quotient(i, k);
    const DepthResult r = depth(q);
    CHECK(r.depth + r.pd == n);
    CHECK(r.depth >= i.min_degree());
    CHECK(r.depth <= n);
  }
}

TEST_CASE("Koszul depth against Betti numbers of restrictions") {
  const Ideal rp2 = rp2_ideal();
  CHECK(oracle::simplicial_depth(rp2, 0) == 3);
  CHECK(oracle::simplicial_depth(rp2, 2) == 2);
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 3;
    const Ideal ideal = oracle::random_ideal(rng, n, 1 + i % 4, 1, 3);
    if (ideal.is_unit()) continue;
    const QuotientPair q(Ideal::unit(n), ideal);
    for (int p : {0, 2}) {
      CAPTURE(to_string(ideal));
      CAPTURE(p);
      CHECK(depth(q.with_field(Field(p))).depth == oracle::simplicial_depth(ideal, p));
    }
  }
}
