#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/hilbert.hpp"
#include "sdlab/poset.hpp"
#include "sdlab/sdepth.hpp"

using namespace sdlab;

namespace {

std::vector<long long> as_ll(const HilbertSeries& h) { return {h.k_poly.begin(), h.k_poly.end()}; }

}  // namespace

TEST_CASE("K-polynomials") {
  CHECK(hilbert_series(QuotientPair(parse_ideal("x1", 1), Ideal(1))).k_poly == std::vector<std::int64_t>{0, 1});
  CHECK(hilbert_series(QuotientPair(parse_ideal("x1", 2), Ideal(2))).k_poly == std::vector<std::int64_t>{0, 1});
  CHECK(hilbert_series(QuotientPair(Ideal::maximal(2), Ideal(2))).k_poly == std::vector<std::int64_t>{0, 2, -1});
  CHECK(free_module_series(3).k_poly == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(free_module_series(3) + free_module_series(4), InputError);
}

TEST_CASE("series coefficients count monomials") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    const Ideal k = oracle::random_ideal(rng, n, static_cast<int>(rng() % 3), 2, n);
    if (k.contains(i)) continue;
    const QuotientPair q = form_quotient(i, k);
    const HilbertSeries h = hilbert_series(q);
    const int d = strata(q).d;
    const auto coeffs = scaled_expansion(h, 0, static_cast<std::size_t>(d + 5));
    for (int deg = 0; deg <= d + 4; ++deg) CHECK(coeffs[static_cast<std::size_t>(deg)] == oracle::hilbert_count(q, deg));
  }
}

TEST_CASE("hdepth1") {
  const HdepthResult m2 = hdepth1(hilbert_series(QuotientPair(Ideal::maximal(2), Ideal(2))));
  CHECK(m2.value == 1);
  REQUIRE(m2.failing_index.has_value());
  CHECK(*m2.failing_index == 2);
  CHECK(*m2.failing_coefficient == -1);
  const HdepthResult free = hdepth1(hilbert_series(QuotientPair(parse_ideal("x1", 2), Ideal(2))));
  CHECK(free.value == 2);
  CHECK_FALSE(free.failing_index.has_value());

  const HilbertSeries h = hilbert_series(QuotientPair(Ideal::maximal(4), Ideal(4)));
  HilbertSeries zero;
  zero.denom_exp = 4;
  CHECK(hdepth1(h + zero).value == hdepth1(h).value);
}

TEST_CASE("Herzog comparisons") {
  const int expected_m[] = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6};
  const int expected_sum[] = {1, 1, 2, 2, 3, 4, 4, 5, 5, 6, 6, 7};
  for (int n = 1; n <= 12; ++n) {
    const HerzogComparison c = herzog_question(n);
    CHECK(c.hdepth_maximal == expected_m[n - 1]);
    CHECK(c.hdepth_free_plus_maximal == expected_sum[n - 1]);
  }
  CHECK(herzog_question(2).equal);
  CHECK_FALSE(herzog_question(6).equal);
  CHECK(herzog_question(7).equal);
  CHECK_THROWS_AS(herzog_question(13), InputError);
}

TEST_CASE("positivity criterion agrees with explicit Hilbert decompositions") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 60) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Ideal i = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    const Ideal k = oracle::random_ideal(rng, n, static_cast<int>(rng() % 3), 1, n);
    if (k.contains(i)) continue;
    const QuotientPair q = form_quotient(i, k);
    if (oracle::poset(q).size() > 6) continue;
    const HilbertSeries h = hilbert_series(q);
    const int value = hdepth1(h).value;
    const int smax = static_cast<int>(h.k_poly.size()) + n;
    CHECK(oracle::hilbert_decomposable(as_ll(h), n, value, smax));
    if (value < n) CHECK_FALSE(oracle::hilbert_decomposable(as_ll(h), n, value + 1, smax));
    CHECK(sdepth(q).value <= value);
    ++checked;
  }
}
