#include "homlie/ring/expression.hpp"

#include <cctype>
#include <string>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), variables_(variables) {}

  Scalar parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Scalar value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  Scalar expr() {
    Scalar value = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (peek() == '/') {
        const std::size_t where = pos_;
        ++pos_;
        Scalar rhs = unary();
        if (rhs.is_zero()) fail_at(where, "division by zero");
        value /= rhs;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail_at(start, "exponent too large");
    const int e = std::stoi(digits);
    if (negative && base.is_zero()) fail_at(start, "zero raised to a negative power");
    return base.pow(negative ? -e : e);
  }

  Scalar primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (accept('(')) {
      Scalar inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Scalar(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (variables_[v] == name) return Scalar(Polynomial::variable(v, variables_.size()));
      }
      fail_at(start, "unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t where, const std::string& message) const {
    throw ParseError(message, 1, where + 1);
  }

  std::string_view text_;
  std::span<const std::string> variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_expression(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse();
}

}  // namespace homlie
