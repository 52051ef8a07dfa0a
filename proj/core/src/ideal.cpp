#include "sdlab/ideal.hpp"

#include <algorithm>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVars) {
    throw InputError("ambient variable count must lie in [1, " + std::to_string(kMaxVars) + "], got " + std::to_string(n));
  }
}

void require_same_ambient(const Ideal& a, const Ideal& b) {
  if (a.ambient() != b.ambient()) {
    throw InputError("ambient mismatch: " + std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()));
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

Ideal::Ideal(int n) : n_(n) { check_n(n); }

Ideal Ideal::generated_by(int n, std::vector<Monomial> gens) { return minimalize(n, std::move(gens)); }

Ideal Ideal::maximal(int n) {
  std::vector<Monomial> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(Monomial::variable(k));
  return generated_by(n, std::move(gens));
}

bool Ideal::contains(Monomial m) const {
  return std::any_of(gens_.begin(), gens_.end(), [m](Monomial g) { return g.divides(m); });
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](Monomial g) { return contains(g); });
}

Ideal minimalize(int n, std::vector<Monomial> gens) {
  Ideal result(n);
  for (Monomial g : gens) check_ambient(g, n);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  std::vector<Monomial> kept;
  for (Monomial g : gens) {
    if (std::none_of(kept.begin(), kept.end(), [g](Monomial k) { return k.divides(g); })) kept.push_back(g);
  }
  result.gens_ = std::move(kept);
  return result;
}

Ideal colon_var(const Ideal& ideal, int j) {
  if (j < 1 || j > ideal.ambient()) throw InputError("colon variable x" + std::to_string(j) + " out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (Monomial g : ideal.gens()) gens.push_back(g.without(j));
  return minimalize(ideal.ambient(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (Monomial f : a.gens()) {
    for (Monomial g : b.gens()) gens.push_back(f.lcm(g));
  }
  return minimalize(a.ambient(), std::move(gens));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ambient(), std::move(gens));
}

std::string to_string(const Ideal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (Monomial g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

Ideal parse_ideal(std::string_view text, int n) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r')) body.remove_suffix(1);
  if (body == "0") return Ideal(n);
  if (body.empty()) throw InputError("empty ideal (write 0 for the zero ideal)");
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    gens.push_back(parse_monomial(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), n));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return minimalize(n, std::move(gens));
}

Field::Field(int characteristic) : p_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  }
}

QuotientPair::QuotientPair(Ideal numerator, Ideal denominator, Field field)
    : num_(std::move(numerator)), den_(std::move(denominator)), field_(field) {
  require_same_ambient(num_, den_);
  if (!num_.contains(den_)) throw InputError("J is not contained in I");
  if (den_.contains(num_)) throw EmptyQuotientError("J = I: the quotient I/J is zero");
  const int d = num_.min_degree();
  normalization_warning_ = !den_.is_zero() && den_.min_degree() <= d;
}

QuotientPair form_quotient(const Ideal& numerator, const Ideal& killed, Field field) {
  require_same_ambient(numerator, killed);
  if (numerator.is_zero()) throw InputError("numerator ideal is zero");
  if (killed.contains(numerator)) throw EmptyQuotientError("I is contained in K: the quotient is zero");
  return QuotientPair(numerator, intersect(killed, numerator), field);
}

}  // namespace sdlab
