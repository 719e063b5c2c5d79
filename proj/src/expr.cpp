#include "mzv/expr.hpp"

#include <cctype>

namespace mzv {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool operator==(const Expression& a, const Expression& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expression::Kind::Constant:
      return a.constant == b.constant;
    case Expression::Kind::Value:
      return a.atom == b.atom;
    case Expression::Kind::Sum:
      return a.signs == b.signs && a.children == b.children;
    case Expression::Kind::Product:
      return a.children == b.children;
    case Expression::Kind::Power:
      return a.exponent == b.exponent && a.children == b.children;
  }
  return false;
}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        col = 1;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col;
        ++pos;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(line, col, what); }

  char take() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    ++col;
    return text[pos++];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    take();
    return true;
  }

  long long integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000) fail("integer literal too large");
      ++pos;
      ++col;
    }
    return v;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++col;
    }
    if (start == pos) fail("expected name");
    return text.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;

  MultiIndex index_list(char stop1, char stop2) {
    MultiIndex out;
    if (lex.peek() == stop1 || lex.peek() == stop2) return out;
    while (true) {
      bool bar = false;
      if (std::isalpha(static_cast<unsigned char>(lex.peek()))) {
        std::string word = lex.name();
        if (word != "bar") lex.fail("unknown keyword '" + word + "' in index");
        bar = true;
      }
      if (lex.accept('{')) {
        if (bar) lex.fail("bar applies to single entries, not blocks");
        long long e = lex.integer();
        lex.expect('}');
        lex.expect('^');
        long long m = lex.integer();
        if (e < 1) lex.fail("exponents must be >= 1");
        for (long long j = 0; j < m; ++j) {
          out.exponents.push_back(static_cast<int>(e));
          out.bars.push_back(false);
        }
      } else {
        long long e = lex.integer();
        if (e < 1) lex.fail("exponents must be >= 1");
        out.exponents.push_back(static_cast<int>(e));
        out.bars.push_back(bar);
      }
      if (!lex.accept(',')) break;
    }
    return out;
  }

  Expression atom() {
    int at_line = lex.line, at_col = lex.col;
    std::string n = lex.name();
    lex.expect('(');
    Expression e;
    e.kind = Expression::Kind::Value;
    if (n == "zeta" || n == "zetastar") {
      MultiIndex idx = index_list(')', ')');
      lex.expect(')');
      if (n == "zetastar") {
        if (idx.has_bars()) throw ParseError(at_line, at_col, "zetastar takes unsigned indices");
        e.atom = Atom::mzsv(idx);
      } else {
        e.atom = idx.has_bars() ? Atom::alt(idx) : Atom::mzv(idx);
      }
    } else if (n == "zb" || n == "zl" || n == "zu") {
      MultiIndex upper = index_list(';', ')');
      MultiIndex lower;
      if (lex.accept(';')) lower = index_list(')', ')');
      lex.expect(')');
      if (upper.has_bars() || lower.has_bars())
        throw ParseError(at_line, at_col, "two-chain sums take unsigned indices");
      FormKind kind = n == "zb" ? FormKind::B : n == "zl" ? FormKind::L : FormKind::U;
      e.atom = Atom::general(GeneralForm{kind, upper, lower});
    } else {
      throw ParseError(at_line, at_col, "unknown atom '" + n + "'");
    }
    return e;
  }

  Expression base() {
    if (lex.accept('(')) {
      Expression inner = expr();
      lex.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      long long num = lex.integer();
      Expression e;
      e.kind = Expression::Kind::Constant;
      if (lex.accept('/')) {
        long long den = lex.integer();
        if (den == 0) lex.fail("zero denominator");
        e.constant = Rational(num, den);
      } else {
        e.constant = Rational(num);
      }
      return e;
    }
    return atom();
  }

  Expression factor() {
    Expression b = base();
    if (lex.accept('^')) {
      long long e = lex.integer();
      if (e > 16) lex.fail("power too large");
      Expression p;
      p.kind = Expression::Kind::Power;
      p.exponent = static_cast<int>(e);
      p.children.push_back(std::move(b));
      return p;
    }
    return b;
  }

  Expression term() {
    Expression first = factor();
    if (lex.peek() != '*') return first;
    Expression prod;
    prod.kind = Expression::Kind::Product;
    prod.children.push_back(std::move(first));
    while (lex.accept('*')) prod.children.push_back(factor());
    return prod;
  }

  Expression expr() {
    Expression sum;
    sum.kind = Expression::Kind::Sum;
    int sign = 1;
    if (lex.accept('-')) sign = -1;
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (true) {
      if (lex.accept('+')) {
        sum.children.push_back(term());
        sum.signs.push_back(1);
      } else if (lex.accept('-')) {
        sum.children.push_back(term());
        sum.signs.push_back(-1);
      } else {
        break;
      }
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  Expression parse_all() {
    Expression e = expr();
    if (!lex.eof()) lex.fail("trailing input");
    return e;
  }
};

void print_rec(const Expression& e, std::string& out, bool parenthesize_sum) {
  switch (e.kind) {
    case Expression::Kind::Constant:
      out += e.constant.sign() < 0 ? "(" + e.constant.to_string() + ")" : e.constant.to_string();
      break;
    case Expression::Kind::Value:
      out += to_string(e.atom);
      break;
    case Expression::Kind::Sum: {
      if (parenthesize_sum) out += "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i == 0) {
          if (e.signs[0] < 0) out += "-";
        } else {
          out += e.signs[i] < 0 ? " - " : " + ";
        }
        print_rec(e.children[i], out, true);
      }
      if (parenthesize_sum) out += ")";
      break;
    }
    case Expression::Kind::Product:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "*";
        print_rec(e.children[i], out, true);
      }
      break;
    case Expression::Kind::Power:
      print_rec(e.children[0], out, true);
      out += "^" + std::to_string(e.exponent);
      break;
  }
}

}  // namespace

Expression parse(const std::string& text) {
  Parser parser{Lexer{text}};
  return parser.parse_all();
}

std::string print(const Expression& expr) {
  std::string out;
  print_rec(expr, out, false);
  return out;
}

LinearCombo to_combo(const Expression& expr) {
  switch (expr.kind) {
    case Expression::Kind::Constant:
      return LinearCombo::constant(expr.constant);
    case Expression::Kind::Value:
      return LinearCombo::of(expr.atom);
    case Expression::Kind::Sum: {
      LinearCombo out;
      for (std::size_t i = 0; i < expr.children.size(); ++i) {
        LinearCombo part = to_combo(expr.children[i]);
        if (expr.signs[i] < 0)
          out -= part;
        else
          out += part;
      }
      return out;
    }
    case Expression::Kind::Product: {
      LinearCombo out = LinearCombo::constant(Rational(1));
      for (const Expression& child : expr.children) out = out * to_combo(child);
      return out;
    }
    case Expression::Kind::Power: {
      LinearCombo base = to_combo(expr.children[0]);
      LinearCombo out = LinearCombo::constant(Rational(1));
      for (int i = 0; i < expr.exponent; ++i) out = out * base;
      return out;
    }
  }
  return LinearCombo();
}

}  // namespace mzv
