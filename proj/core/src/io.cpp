#include "sdlab/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace sdlab {

ParseError::ParseError(int line, int column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Line {
  std::string_view text;
  int number;
};

/// Column (1-based) of the first non-blank character at or after `pos`.
int column_of(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_blank(text[pos])) ++pos;
  return static_cast<int>(pos) + 1;
}

Ideal parse_ideal_at(const Line& line, std::size_t start, int n) {
  const std::string_view body = line.text.substr(start);
  std::size_t pos = 0;
  std::vector<Monomial> gens;
  std::string_view trimmed = body;
  while (!trimmed.empty() && is_blank(trimmed.front())) trimmed.remove_prefix(1);
  while (!trimmed.empty() && is_blank(trimmed.back())) trimmed.remove_suffix(1);
  if (trimmed == "0") return Ideal(n);
  if (trimmed.empty()) throw ParseError(line.number, column_of(line.text, start), "empty ideal (write 0 for the zero ideal)");
  while (true) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view token = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    try {
      gens.push_back(parse_monomial(token, n));
    } catch (const InputError& e) {
      throw ParseError(line.number, column_of(line.text, start + pos), e.what());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return minimalize(n, std::move(gens));
}

}  // namespace

QuotientPair parse_input(std::string_view text, Field field) {
  std::optional<int> n;
  std::optional<Ideal> num;
  std::optional<Ideal> den;
  int number = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    Line line{text.substr(offset, end - offset), ++number};
    offset = end + 1;
    if (const std::size_t hash = line.text.find('#'); hash != std::string_view::npos) line.text = line.text.substr(0, hash);

    std::size_t key_start = 0;
    while (key_start < line.text.size() && is_blank(line.text[key_start])) ++key_start;
    if (key_start == line.text.size()) continue;
    const std::size_t eq = line.text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line.number, static_cast<int>(key_start) + 1, "expected 'key = value'");
    std::string_view key = line.text.substr(key_start, eq - key_start);
    while (!key.empty() && is_blank(key.back())) key.remove_suffix(1);

    if (key == "n") {
      if (n) throw ParseError(line.number, static_cast<int>(key_start) + 1, "duplicate n");
      std::size_t vpos = eq + 1;
      while (vpos < line.text.size() && is_blank(line.text[vpos])) ++vpos;
      std::size_t vend = line.text.size();
      while (vend > vpos && is_blank(line.text[vend - 1])) --vend;
      int value = 0;
      const auto [ptr, ec] = std::from_chars(line.text.data() + vpos, line.text.data() + vend, value);
      if (ec != std::errc{} || ptr != line.text.data() + vend) {
        throw ParseError(line.number, static_cast<int>(vpos) + 1, "n must be an integer");
      }
      if (value < 1 || value > kMaxVars) {
        throw ParseError(line.number, static_cast<int>(vpos) + 1, "n must lie in [1, " + std::to_string(kMaxVars) + "]");
      }
      n = value;
    } else if (key == "I" || key == "J") {
      if (!n) throw ParseError(line.number, static_cast<int>(key_start) + 1, "n must be given before the ideals");
      auto& slot = key == "I" ? num : den;
      if (slot) throw ParseError(line.number, static_cast<int>(key_start) + 1, "duplicate " + std::string(key));
      slot = parse_ideal_at(line, eq + 1, *n);
    } else {
      throw ParseError(line.number, static_cast<int>(key_start) + 1, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!n) throw ParseError(number, 1, "missing n");
  if (!num) throw ParseError(number, 1, "missing I");
  return QuotientPair(*num, den.value_or(Ideal(*n)), field);
}

std::string serialize_input(const QuotientPair& q) {
  std::ostringstream out;
  out << "n=" << q.ambient() << "\n";
  out << "I = " << to_string(q.numerator()) << "\n";
  out << "J = " << to_string(q.denominator()) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sdlab
