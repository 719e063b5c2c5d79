#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/combo.hpp"

namespace mzv {

/// parse failure with 1-based position information
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/**
 * Expression tree over rational literals, value atoms, +, -, *, and integer
 * powers. The grammar (whitespace insensitive):
 *
 *   expr    := ['-'] term (('+' | '-') term)*
 *   term    := factor ('*' factor)*
 *   factor  := base ('^' INT)?
 *   base    := RATIONAL | atom | '(' expr ')'
 *   atom    := NAME '(' indexlist (';' indexlist)? ')'
 *   entry   := INT | 'bar' INT | '{' INT '}' '^' INT
 *
 * NAME is one of zeta, zetastar, zb, zl, zu. RATIONAL is INT or INT/INT.
 */
struct Expression {
  enum class Kind { Constant, Value, Sum, Product, Power };

  Kind kind = Kind::Constant;
  Rational constant;                  // Constant
  Atom atom;                          // Value
  std::vector<Expression> children;   // Sum, Product, Power (single child)
  std::vector<int> signs;             // Sum: +1 / -1 per child
  int exponent = 1;                   // Power

  friend bool operator==(const Expression& a, const Expression& b);
};

Expression parse(const std::string& text);
std::string print(const Expression& expr);

/// lower to a rational combination of atom products (powers expand, signs
/// fold into coefficients)
LinearCombo to_combo(const Expression& expr);

}  // namespace mzv
