#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homlie {

using Rational = mpq_class;

/// Exponent vector of a monomial; its length is the number of ring variables.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic comparison: total degree first, then lexicographic
/// with the first declared variable largest. Returns <0, 0, >0.
int compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial exponents;
  Rational coefficient;
};

/// Multivariate polynomial with exact rational coefficients, stored in
/// expanded normal form: terms sorted by descending grlex order, no zero
/// coefficients. The representation is unique, so equality is structural.
///
/// A polynomial with `nvars() == 0` is a bare constant and embeds into every
/// polynomial ring; mixing two different nonzero variable counts throws
/// RingMismatchError.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(const Rational& c, std::size_t nvars = 0);  // NOLINT: implicit from a constant

  static Polynomial variable(std::size_t index, std::size_t nvars);
  static Polynomial monomial(Monomial exponents, const Rational& coefficient);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial; zero for the zero polynomial.
  Rational constant_value() const;

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Coefficient of x_var^power, viewed as a polynomial in the other variables.
  Polynomial coefficient_in(std::size_t var, std::uint32_t power) const;
  Polynomial times_variable_power(std::size_t var, std::uint32_t power) const;

  /// Same polynomial re-embedded into a ring with `nvars` variables. Only
  /// constants change variable count this way.
  Polynomial lifted(std::size_t nvars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::uint32_t exponent) const;
  Polynomial derivative(std::size_t var) const;
  /// Simultaneous substitution x_i -> images[i].
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  static std::size_t common_nvars(const Polynomial& a, const Polynomial& b);
  void adopt_nvars(std::size_t nvars);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Exact quotient a / b when b divides a, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (primitive-PRS recursion on the
/// variables). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace homlie
