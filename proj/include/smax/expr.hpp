#pragma once

// Tiny expression parser for boundary data on the command line: numbers, the
// variables x and y, cos/sin/sqrt, + - * /, parentheses and unary minus.

#include <cctype>
#include <cmath>
#include <functional>
#include <memory>
#include <string>

#include "smax/errors.hpp"

namespace smax {

using BoundaryExpr = std::function<double(double, double)>;

namespace detail {

struct ExprParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ConfigError("expression: " + what + " at position " +
                      std::to_string(pos) + " in \"" + src + "\"");
  }

  BoundaryExpr parse() {
    BoundaryExpr e = expr();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return e;
  }

  BoundaryExpr expr() {
    BoundaryExpr lhs = term();
    while (true) {
      if (eat('+')) {
        BoundaryExpr rhs = term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) + rhs(x, y); };
      } else if (eat('-')) {
        BoundaryExpr rhs = term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) - rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }

  BoundaryExpr term() {
    BoundaryExpr lhs = factor();
    while (true) {
      if (eat('*')) {
        BoundaryExpr rhs = factor();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) * rhs(x, y); };
      } else if (eat('/')) {
        BoundaryExpr rhs = factor();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) / rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }

  BoundaryExpr factor() {
    if (eat('-')) {
      BoundaryExpr e = factor();
      return [e](double x, double y) { return -e(x, y); };
    }
    return primary();
  }

  BoundaryExpr primary() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end");
    const char c = src[pos];
    if (c == '(') {
      ++pos;
      BoundaryExpr e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = 0;
      const double val = std::stod(src.substr(pos), &end);
      pos += end;
      return [val](double, double) { return val; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < src.size() &&
             std::isalpha(static_cast<unsigned char>(src[end])))
        ++end;
      const std::string name = src.substr(pos, end - pos);
      pos = end;
      if (name == "x") return [](double x, double) { return x; };
      if (name == "y") return [](double, double y) { return y; };
      if (name == "cos" || name == "sin" || name == "sqrt") {
        if (!eat('(')) fail("expected '(' after " + name);
        BoundaryExpr arg = expr();
        if (!eat(')')) fail("missing ')' after " + name);
        if (name == "cos")
          return [arg](double x, double y) { return std::cos(arg(x, y)); };
        if (name == "sin")
          return [arg](double x, double y) { return std::sin(arg(x, y)); };
        return [arg](double x, double y) { return std::sqrt(arg(x, y)); };
      }
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace detail

inline BoundaryExpr parse_boundary_expr(const std::string& src) {
  detail::ExprParser p(src);
  return p.parse();
}

}  // namespace smax
