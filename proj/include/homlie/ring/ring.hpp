#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "homlie/ring/scalar.hpp"

namespace homlie {

/// Substitution endomorphism x_i -> p_i of Q[x_1..x_k], extended to the
/// fraction field, together with a declared inverse substitution. Both
/// compositions are checked to fix every variable at construction.
class RingEndomorphism {
 public:
  /// Identity on `nvars` variables.
  explicit RingEndomorphism(std::size_t nvars = 0);
  RingEndomorphism(std::vector<Polynomial> images, std::vector<Polynomial> inverse_images);

  std::size_t nvars() const { return images_.size(); }
  bool is_identity() const { return identity_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const std::vector<Polynomial>& inverse_images() const { return inverse_images_; }

  Scalar apply(const Scalar& f) const;
  Scalar apply_inverse(const Scalar& f) const;
  /// sigma^k for any integer k.
  Scalar apply_power(const Scalar& f, int k) const;

  RingEndomorphism inverse() const { return RingEndomorphism(inverse_images_, images_); }

 private:
  std::vector<Polynomial> images_;
  std::vector<Polynomial> inverse_images_;
  bool identity_ = true;
};

enum class RingKind { Rationals, Polynomial, FractionField };

/// The coefficient ring of a structure: Q, Q[x_1..x_k] or Q(x_1..x_k),
/// carrying the base-map pullback phi* as a substitution endomorphism.
class CoefficientRing {
 public:
  /// Q with the identity pullback.
  CoefficientRing();
  CoefficientRing(RingKind kind, std::vector<std::string> variables, RingEndomorphism pullback);

  static std::shared_ptr<const CoefficientRing> rationals();

  RingKind kind() const { return kind_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const RingEndomorphism& pullback() const { return pullback_; }

  Scalar variable(std::size_t index) const;
  /// Membership in this ring (not its fraction field) for the polynomial kind.
  bool contains(const Scalar& f) const;
  /// Quotient in the ring: exact division for Q[x], anything nonzero otherwise.
  Scalar divide(const Scalar& a, const Scalar& b) const;

  Scalar phi(const Scalar& f) const { return pullback_.apply(f); }
  Scalar phi_inverse(const Scalar& f) const { return pullback_.apply_inverse(f); }

  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& f) const { return f.to_string(variables_); }
  std::string describe() const;

 private:
  RingKind kind_ = RingKind::Rationals;
  std::vector<std::string> variables_;
  RingEndomorphism pullback_;
};

using RingPtr = std::shared_ptr<const CoefficientRing>;

/// Q(x_1..x_k) with the same pullback; Q and fraction fields are returned as is.
RingPtr fraction_field(const RingPtr& ring);

/// Which map precedes the ordinary derivation in the factored form tau∘D.
/// `Pullback` is the (phi*, phi*)-derivation used for anchors; `Identity`
/// yields an ordinary derivation and exists for probing the twisted laws.
enum class DerivationTwist { Pullback, Identity };

/// X = tau∘D with D = sum_i q_i d/dx_i. For tau = phi* this satisfies
/// X(fg) = X(f) phi*(g) + phi*(f) X(g). Over Q the only such map is zero.
class TwistedDerivation {
 public:
  TwistedDerivation() = default;
  TwistedDerivation(RingPtr ring, std::vector<Scalar> coefficients,
                    DerivationTwist twist = DerivationTwist::Pullback);

  static TwistedDerivation zero(RingPtr ring);

  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  DerivationTwist twist() const { return twist_; }
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;

  Scalar operator()(const Scalar& f) const;

  /// sum_k weights[k] * derivations[k]; every summand must share one twist.
  static TwistedDerivation combine(RingPtr ring, std::span<const Scalar> weights,
                                   std::span<const TwistedDerivation> derivations);

  friend bool operator==(const TwistedDerivation& a, const TwistedDerivation& b) {
    return a.twist_ == b.twist_ && a.coefficients_ == b.coefficients_;
  }

 private:
  RingPtr ring_;
  std::vector<Scalar> coefficients_;
  DerivationTwist twist_ = DerivationTwist::Pullback;
};

}  // namespace homlie
