#pragma once

#include <span>
#include <vector>

#include "homlie/algebroid/structure.hpp"

namespace homlie {

/// Fully antisymmetric table over a rank-n frame, stored by its values on
/// strictly increasing index tuples in lexicographic order.
class AlternatingTable {
 public:
  AlternatingTable() = default;
  AlternatingTable(std::size_t rank, std::size_t degree);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  /// Increasing index tuples of length `degree` drawn from 0..rank-1.
  static const std::vector<std::vector<std::size_t>>& tuples(std::size_t rank, std::size_t degree);
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples(rank_, degree_); }

  const Scalar& operator[](std::size_t k) const { return values_[k]; }
  Scalar& operator[](std::size_t k) { return values_[k]; }
  /// Value on an arbitrary index tuple: zero on repeats, signed on permutations.
  Scalar get(std::span<const std::size_t> indices) const;
  /// Adds `value` at an arbitrary tuple, sorting it with its sign.
  void add(std::span<const std::size_t> indices, const Scalar& value);

  bool is_zero() const;
  const std::vector<Scalar>& values() const { return values_; }

  friend bool operator==(const AlternatingTable& a, const AlternatingTable& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 protected:
  std::size_t index_of(std::span<const std::size_t> increasing) const;

  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  std::vector<Scalar> values_;
};

template <class Tag>
class Alternating : public AlternatingTable {
 public:
  using AlternatingTable::AlternatingTable;

  friend Alternating operator+(Alternating a, const Alternating& b) {
    for (std::size_t k = 0; k < a.values_.size(); ++k) a.values_[k] += b.values_[k];
    return a;
  }
  friend Alternating operator-(Alternating a, const Alternating& b) {
    for (std::size_t k = 0; k < a.values_.size(); ++k) a.values_[k] -= b.values_[k];
    return a;
  }
  friend Alternating operator*(const Scalar& s, Alternating a) {
    for (auto& v : a.values_) v = s * v;
    return a;
  }
};

struct FormTag {};
struct MultivectorTag {};
/// omega in Gamma(wedge^q A*); component I is omega(e_I).
using Form = Alternating<FormTag>;
/// u in Gamma(wedge^p A); component I is the coefficient of e_{i1}^...^e_{ip}.
using Multivector = Alternating<MultivectorTag>;

/// Degree-0 form holding a function.
Form function_form(std::size_t rank, const Scalar& f);
/// 1-form with the given values on the frame.
Form covector(const Vector& values);
/// Degree-1 multivector of a section.
Multivector vector_field(const Section& x);

/// Exterior-algebra evaluation omega(z_1..z_q) for a q-form.
Scalar evaluate(const Form& omega, std::span<const Section> args);

/// phi^dagger(omega)(w_1..w_q) = phi*(omega(phi^{-1} w_1, .., phi^{-1} w_q)).
Form dual_twist(const HomBundle& bundle, const Form& omega);

/// d^A as a table: evaluates the defining two-sum formula on frame tuples.
Form exterior_derivative(const HomAlgebroid& s, const Form& omega);
/// The defining formula evaluated on arbitrary sections z_1..z_{q+1}.
Scalar exterior_derivative_at(const HomAlgebroid& s, const Form& omega,
                              std::span<const Section> args);

/// Covariant Lie derivative along z:
///   L_z omega(z_1..z_q) = a(phi z) omega(phi^{-1} z_1, ..)
///                         - sum_i phi^dagger(omega)(z_1, .., [z, phi^{-1} z_i], .., z_q).
Form lie_derivative_form(const HomAlgebroid& s, const Section& z, const Form& omega);
Scalar lie_derivative_form_at(const HomAlgebroid& s, const Section& z, const Form& omega,
                              std::span<const Section> args);

/// w_1 ^ .. ^ w_k for sections (coefficients by minors).
Multivector wedge_sections(std::size_t rank, std::span<const Section> factors);
Multivector wedge(const Multivector& u, const Multivector& v);
/// phi_A on wedges: phi(f e_I) = phi*(f) phi(e_i1) ^ .. ^ phi(e_ip).
Multivector twist(const HomBundle& bundle, const Multivector& u);

/// Hom-Schouten bracket of degrees p, q >= 1. Each component u_I e_I is
/// expanded as the decomposable (u_I e_i1) ^ e_i2 ^ .. ^ e_ip before the
/// bracket formula is applied; the result has degree p + q - 1 and is zero
/// when that exceeds the rank.
Multivector schouten_bracket(const HomAlgebroid& s, const Multivector& u, const Multivector& v);
/// L_u(v) = [u, v] for a section u.
Multivector lie_derivative_multivector(const HomAlgebroid& s, const Section& u,
                                       const Multivector& v);

}  // namespace homlie
