#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdrenc/errors.hpp"

namespace sdrenc {

/// Arithmetic over the two inputs `a` and `b`, used for user-defined
/// distances, e.g. "abs(a - b)" or "min(abs(a-b), 7-abs(a-b))".
///
/// Supports + - * / ^, unary minus, parentheses, and abs, sqrt, min, max.
/// Parsed once into postfix form; evaluation is allocation-free apart from
/// the evaluation stack.
class DistanceExpression {
 public:
  static DistanceExpression parse(std::string_view text) {
    DistanceExpression expr;
    expr.source_ = std::string(text);
    Parser p{text, 0, expr.program_};
    p.expression();
    p.skip_space();
    if (p.pos != text.size()) throw ParseError(p.pos, "unexpected trailing input");
    return expr;
  }

  const std::string& source() const noexcept { return source_; }

  double operator()(double a, double b) const {
    std::vector<double> stack;
    stack.reserve(program_.size());
    auto pop = [&] {
      double v = stack.back();
      stack.pop_back();
      return v;
    };
    for (const auto& op : program_) {
      switch (op.code) {
        case Code::number: stack.push_back(op.value); break;
        case Code::var_a: stack.push_back(a); break;
        case Code::var_b: stack.push_back(b); break;
        case Code::neg: stack.back() = -stack.back(); break;
        case Code::abs: stack.back() = std::abs(stack.back()); break;
        case Code::sqrt: stack.back() = std::sqrt(stack.back()); break;
        default: {
          const double rhs = pop();
          const double lhs = pop();
          stack.push_back(apply(op.code, lhs, rhs));
        }
      }
    }
    return stack.back();
  }

 private:
  enum class Code { number, var_a, var_b, add, sub, mul, div, pow, neg, abs, sqrt, min, max };

  struct Op {
    Code code;
    double value = 0.0;
  };

  static double apply(Code code, double lhs, double rhs) {
    switch (code) {
      case Code::add: return lhs + rhs;
      case Code::sub: return lhs - rhs;
      case Code::mul: return lhs * rhs;
      case Code::div: return lhs / rhs;
      case Code::pow: return std::pow(lhs, rhs);
      case Code::min: return std::min(lhs, rhs);
      case Code::max: return std::max(lhs, rhs);
      default: return 0.0;
    }
  }

  struct Parser {
    std::string_view text;
    std::size_t pos;
    std::vector<Op>& out;

    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool accept(char c) {
      skip_space();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "'");
    }

    void expression() {
      term();
      for (;;) {
        if (accept('+')) {
          term();
          out.push_back({Code::add});
        } else if (accept('-')) {
          term();
          out.push_back({Code::sub});
        } else {
          return;
        }
      }
    }

    void term() {
      unary();
      for (;;) {
        if (accept('*')) {
          unary();
          out.push_back({Code::mul});
        } else if (accept('/')) {
          unary();
          out.push_back({Code::div});
        } else {
          return;
        }
      }
    }

    void unary() {
      if (accept('-')) {
        unary();
        out.push_back({Code::neg});
        return;
      }
      power();
    }

    void power() {
      primary();
      if (accept('^')) {
        unary();
        out.push_back({Code::pow});
      }
    }

    void primary() {
      skip_space();
      if (pos >= text.size()) throw ParseError(pos, "unexpected end of expression");
      const char c = text[pos];
      if (accept('(')) {
        expression();
        expect(')');
        return;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc()) throw ParseError(pos, "bad number");
        pos = static_cast<std::size_t>(ptr - text.data());
        out.push_back({Code::number, v});
        return;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        const auto start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        const auto name = text.substr(start, pos - start);
        if (name == "a") return out.push_back({Code::var_a});
        if (name == "b") return out.push_back({Code::var_b});
        if (name == "abs" || name == "sqrt") {
          expect('(');
          expression();
          expect(')');
          out.push_back({name == "abs" ? Code::abs : Code::sqrt});
          return;
        }
        if (name == "min" || name == "max") {
          expect('(');
          expression();
          expect(',');
          expression();
          expect(')');
          out.push_back({name == "min" ? Code::min : Code::max});
          return;
        }
        throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
      }
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  };

  std::string source_;
  std::vector<Op> program_;
};

}  // namespace sdrenc
