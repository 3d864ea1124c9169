#include "homlie/ring/scalar.hpp"

#include <cstdlib>
#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

Scalar::Scalar(long value) : num_(Rational(value)) {}

Scalar::Scalar(const Rational& value) : num_(value) {}

Scalar::Scalar(Polynomial value) : num_(std::move(value)) {}

Scalar::Scalar(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZeroError();
  if (num_.is_zero()) {
    const std::size_t n = std::max(num_.nvars(), den_.nvars());
    num_ = Polynomial(n);
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    const Rational c = den_.constant_value();
    if (c != 1) num_ *= Rational(1 / c);
    den_ = Polynomial(Rational(1));
    return;
  }
  const std::size_t n = std::max(num_.nvars(), den_.nvars());
  num_ = num_.lifted(n);
  den_ = den_.lifted(n);
  const Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) den_ = Polynomial(Rational(1));
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw DomainError("ring element is not a rational constant");
  return num_.constant_value();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.is_zero()) {
    if (other.nvars() > nvars()) num_ = num_.lifted(other.nvars());
    return *this;
  }
  if (is_polynomial() && other.is_polynomial()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_polynomial() && other.is_polynomial()) {
    num_ *= other.num_;
    return *this;
  }
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DivisionByZeroError();
  if (other.is_constant()) {
    num_ *= Rational(1 / other.num_.constant_value());
    return *this;
  }
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return Scalar(Rational(1)) / pow(-exponent);
  if (is_polynomial()) return Scalar(num_.pow(static_cast<std::uint32_t>(exponent)));
  return Scalar(num_.pow(static_cast<std::uint32_t>(exponent)),
                den_.pow(static_cast<std::uint32_t>(exponent)));
}

Scalar Scalar::derivative(std::size_t var) const {
  if (is_polynomial()) return Scalar(num_.derivative(var));
  Polynomial top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return Scalar(std::move(top), den_ * den_);
}

Scalar Scalar::substitute(std::span<const Polynomial> images) const {
  if (is_constant()) return *this;
  const Polynomial top = num_.lifted(images.size()).substitute(images);
  if (is_polynomial()) return Scalar(top);
  return Scalar(top, den_.lifted(images.size()).substitute(images));
}

std::string Scalar::to_string(std::span<const std::string> names) const {
  if (is_polynomial()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace homlie
