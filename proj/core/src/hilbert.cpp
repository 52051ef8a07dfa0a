#include "sdlab/hilbert.hpp"

#include <algorithm>

#include "sdlab/errors.hpp"
#include "sdlab/poset.hpp"

namespace sdlab {

namespace {

std::vector<std::int64_t> binomial_row(int e) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(e) + 1, 1);
  for (int j = 1; j < e; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] * (e - j + 1) / j;
  return row;
}

void trim(std::vector<std::int64_t>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

/// Degree of K; -1 when K ≡ 0.
int degree_of(const std::vector<std::int64_t>& poly) {
  for (std::size_t i = poly.size(); i-- > 0;) {
    if (poly[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

std::vector<BigInt> prefix_sums(const std::vector<std::int64_t>& k_poly, int times, std::size_t count) {
  std::vector<BigInt> c(count, 0);
  for (std::size_t i = 0; i < std::min(count, k_poly.size()); ++i) c[i] = k_poly[i];
  for (int t = 0; t < times; ++t) {
    for (std::size_t i = 1; i < count; ++i) c[i] += c[i - 1];
  }
  return c;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Smallest x ≥ 0 with x^e · lead ≥ value (lead, value ≥ 0, lead > 0).
BigInt integer_root_ceil(const BigInt& value, const BigInt& lead, int e) {
  BigInt lo = 0;
  BigInt hi = 1;
  auto ok = [&](const BigInt& x) { return boost::multiprecision::pow(x, static_cast<unsigned>(e)) * lead >= value; };
  while (!ok(hi)) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

/// Upper bound on the positive real roots of Σ a_i j^i (min of Cauchy and Fujiwara).
BigInt root_bound(const std::vector<BigInt>& a) {
  int e = static_cast<int>(a.size()) - 1;
  while (e >= 0 && a[static_cast<std::size_t>(e)] == 0) --e;
  if (e <= 0) return 0;
  const BigInt lead = abs_big(a[static_cast<std::size_t>(e)]);
  BigInt cauchy = 0;
  BigInt fujiwara = 0;
  for (int i = 0; i < e; ++i) {
    const BigInt ai = abs_big(a[static_cast<std::size_t>(i)]);
    cauchy = std::max(cauchy, BigInt((ai + lead - 1) / lead));
    fujiwara = std::max(fujiwara, integer_root_ceil(ai, lead, e - i));
  }
  return std::min(BigInt(cauchy + 1), BigInt(2 * fujiwara));
}

/**
 * Tail of K/(1-t)^m: for j ≥ 1 the coefficient at deg K + j equals
 * Σ_{i<m} α_i·C(j+i-1, i) with α_i the value at deg K of the (m-i)-fold
 * prefix sum. Returned scaled by (m-1)! as an integer polynomial in j.
 */
std::vector<BigInt> tail_polynomial(const std::vector<std::int64_t>& k_poly, int m) {
  const int deg = degree_of(k_poly);
  const std::size_t len = static_cast<std::size_t>(deg) + 1;
  std::vector<BigInt> alpha(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) alpha[static_cast<std::size_t>(i)] = prefix_sums(k_poly, m - i, len).back();
  BigInt fact = 1;
  for (int i = 2; i < m; ++i) fact *= i;  // (m-1)!

  std::vector<BigInt> out(static_cast<std::size_t>(std::max(m, 1)), 0);
  std::vector<BigInt> rising{1};  // Π_{l<i} (j + l)
  BigInt i_fact = 1;
  for (int i = 0; i < m; ++i) {
    if (i > 0) {
      std::vector<BigInt> next(rising.size() + 1, 0);
      for (std::size_t c = 0; c < rising.size(); ++c) {
        next[c] += rising[c] * (i - 1);
        next[c + 1] += rising[c];
      }
      rising = std::move(next);
      i_fact *= i;
    }
    const BigInt scale = alpha[static_cast<std::size_t>(i)] * (fact / i_fact);
    for (std::size_t c = 0; c < rising.size(); ++c) out[c] += scale * rising[c];
  }
  return out;
}

struct Positivity {
  bool positive = true;
  std::size_t index = 0;
  BigInt value = 0;
};

Positivity check_positive(const std::vector<std::int64_t>& k_poly, int m) {
  const int deg = degree_of(k_poly);
  if (deg < 0) return {};
  BigInt bound = 0;
  if (m >= 1) bound = root_bound(tail_polynomial(k_poly, m));
  if (bound > 10'000'000) throw InvariantError("hdepth root bound unexpectedly large");
  const std::size_t count = static_cast<std::size_t>(deg) + static_cast<std::size_t>(bound) + 2;
  const std::vector<BigInt> c = prefix_sums(k_poly, m, count);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) return {false, i, c[i]};
  }
  return {};
}

}  // namespace

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.denom_exp != b.denom_exp) throw InputError("formal sum of Hilbert series with different ambient dimensions");
  HilbertSeries out;
  out.denom_exp = a.denom_exp;
  out.k_poly.assign(std::max(a.k_poly.size(), b.k_poly.size()), 0);
  for (std::size_t i = 0; i < a.k_poly.size(); ++i) out.k_poly[i] += a.k_poly[i];
  for (std::size_t i = 0; i < b.k_poly.size(); ++i) out.k_poly[i] += b.k_poly[i];
  trim(out.k_poly);
  return out;
}

HilbertSeries hilbert_series(const QuotientPair& q) {
  const int n = q.ambient();
  HilbertSeries h;
  h.denom_exp = n;
  h.k_poly.assign(static_cast<std::size_t>(n) + 1, 0);
  const PosetSnapshot snap = enumerate_poset(q);
  for (int deg = 0; deg <= n; ++deg) {
    const auto count = static_cast<std::int64_t>(snap.degree(deg).size());
    if (count == 0) continue;
    const std::vector<std::int64_t> row = binomial_row(n - deg);
    for (int j = 0; j <= n - deg; ++j) {
      const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
      h.k_poly[static_cast<std::size_t>(deg + j)] += sign * count * row[static_cast<std::size_t>(j)];
    }
  }
  trim(h.k_poly);
  return h;
}

HilbertSeries free_module_series(int n, int shift) {
  if (shift < 0) throw InputError("negative shift");
  HilbertSeries h;
  h.denom_exp = n;
  h.k_poly.assign(static_cast<std::size_t>(shift) + 1, 0);
  h.k_poly.back() = 1;
  return h;
}

std::vector<BigInt> scaled_expansion(const HilbertSeries& h, int p, std::size_t count) {
  if (p < 0 || p > h.denom_exp) throw InputError("scaling exponent outside [0, n]");
  return prefix_sums(h.k_poly, h.denom_exp - p, count);
}

HdepthResult hdepth1(const HilbertSeries& h) {
  HdepthResult res;
  Positivity last_failure;
  bool have_failure = false;
  for (int p = h.denom_exp; p >= 0; --p) {
    const Positivity pos = check_positive(h.k_poly, h.denom_exp - p);
    if (pos.positive) {
      res.value = p;
      if (have_failure) {
        res.failing_index = last_failure.index;
        res.failing_coefficient = last_failure.value;
      }
      return res;
    }
    last_failure = pos;
    have_failure = true;
  }
  throw InvariantError("Hilbert series with negative coefficients");
}

HerzogComparison herzog_question(int n) {
  if (n < 1 || n > 12) throw InputError("herzog: n must lie in [1, 12]");
  const HilbertSeries m = hilbert_series(QuotientPair(Ideal::maximal(n), Ideal(n)));
  HerzogComparison out;
  out.n = n;
  out.hdepth_maximal = hdepth1(m).value;
  out.hdepth_free_plus_maximal = hdepth1(free_module_series(n) + m).value;
  out.equal = out.hdepth_maximal == out.hdepth_free_plus_maximal;
  return out;
}

}  // namespace sdlab
