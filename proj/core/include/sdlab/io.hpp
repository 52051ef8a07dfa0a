#pragma once

#include <string>
#include <string_view>

#include "sdlab/errors.hpp"
#include "sdlab/ideal.hpp"

namespace sdlab {

/// Syntax error in an instance file, with 1-based position.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/**
 * Reads the instance format:
 *
 *   # comment
 *   n=5
 *   I = x1*x2, x1*x3
 *   J = x1*x2*x3      (or 0; the line may be omitted)
 *
 * Syntax problems raise ParseError; semantic ones (J ⊄ I, J = I) raise
 * InputError / EmptyQuotientError from QuotientPair.
 */
QuotientPair parse_input(std::string_view text, Field field = Field{});

/// Inverse of parse_input.
std::string serialize_input(const QuotientPair& q);

/// Reads a whole file; InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace sdlab
