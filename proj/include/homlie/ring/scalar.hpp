#pragma once

#include <span>
#include <string>

#include "homlie/ring/polynomial.hpp"

namespace homlie {

/// An exact ring element: a reduced fraction num/den of polynomials whose
/// denominator is monic and coprime to the numerator. Rationals are the
/// constant case and polynomials the den == 1 case, so the one type serves
/// all three coefficient-ring kinds and equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);                    // NOLINT: implicit from integer literals
  Scalar(const Rational& value);         // NOLINT
  Scalar(Polynomial value);              // NOLINT
  Scalar(Polynomial numerator, Polynomial denominator);

  static Scalar from_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar pow(int exponent) const;
  /// Partial derivative by the quotient rule.
  Scalar derivative(std::size_t var) const;
  /// Simultaneous polynomial substitution applied to numerator and denominator.
  Scalar substitute(std::span<const Polynomial> images) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_{Rational(1)};
};

}  // namespace homlie
