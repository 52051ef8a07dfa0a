#include "sdlab/monomial.hpp"

#include <cctype>
#include <charconv>

#include "sdlab/errors.hpp"

namespace sdlab {

Monomial Monomial::from_vars(std::initializer_list<int> vars) {
  return from_vars(std::vector<int>(vars));
}

Monomial Monomial::from_vars(const std::vector<int>& vars) {
  VarMask mask = 0;
  for (int k : vars) {
    if (k < 1 || k > kMaxVars) throw InputError("variable index out of range: " + std::to_string(k));
    mask |= VarMask{1} << (k - 1);
  }
  return Monomial(mask);
}

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (VarMask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(Monomial m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int k : m.vars()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(k);
  }
  return out;
}

void check_ambient(Monomial m, int n) {
  if (m.max_var() > n) {
    throw InputError("monomial " + to_string(m) + " uses a variable outside x1..x" + std::to_string(n));
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
  const std::string_view body = trim(text);
  if (body == "1") return Monomial{};
  if (body.empty()) throw InputError("empty monomial");
  VarMask mask = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t star = body.find('*', pos);
    const std::string_view factor = trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'x') {
      throw InputError("bad factor '" + std::string(factor) + "' in monomial '" + std::string(body) + "'");
    }
    int k = 0;
    const auto [ptr, ec] = std::from_chars(factor.data() + 1, factor.data() + factor.size(), k);
    if (ec != std::errc{} || ptr != factor.data() + factor.size()) {
      throw InputError("bad variable index in '" + std::string(factor) + "'");
    }
    if (k < 1 || k > n) {
      throw InputError("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(n));
    }
    const VarMask bit = VarMask{1} << (k - 1);
    if (mask & bit) throw InputError("monomial '" + std::string(body) + "' is not squarefree");
    mask |= bit;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial::from_mask(mask);
}

}  // namespace sdlab
