#include "homlie/ring/ring.hpp"

#include <set>
#include <utility>

#include "homlie/errors.hpp"
#include "homlie/ring/expression.hpp"

namespace homlie {

namespace {

bool fixes_generators(std::span<const Polynomial> outer, std::span<const Polynomial> inner,
                      std::size_t& bad_var) {
  for (std::size_t v = 0; v < outer.size(); ++v) {
    const Polynomial composed = outer[v].lifted(inner.size()).substitute(inner);
    if (!(composed == Polynomial::variable(v, inner.size()))) {
      bad_var = v;
      return false;
    }
  }
  return true;
}

}  // namespace

RingEndomorphism::RingEndomorphism(std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) images_.push_back(Polynomial::variable(v, nvars));
  inverse_images_ = images_;
}

RingEndomorphism::RingEndomorphism(std::vector<Polynomial> images,
                                   std::vector<Polynomial> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const std::size_t n = images_.size();
  if (inverse_images_.size() != n) {
    throw InvalidStructureError("the inverse substitution must give one image per variable");
  }
  for (auto& p : images_) p = p.lifted(n);
  for (auto& p : inverse_images_) p = p.lifted(n);
  std::size_t bad = 0;
  if (!fixes_generators(images_, inverse_images_, bad)) {
    throw InvalidStructureError("substitution followed by its declared inverse moves variable " +
                                std::to_string(bad + 1));
  }
  if (!fixes_generators(inverse_images_, images_, bad)) {
    throw InvalidStructureError("declared inverse followed by the substitution moves variable " +
                                std::to_string(bad + 1));
  }
  identity_ = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(images_[v] == Polynomial::variable(v, n))) identity_ = false;
  }
}

Scalar RingEndomorphism::apply(const Scalar& f) const {
  if (identity_ || f.is_constant()) return f;
  return f.substitute(images_);
}

Scalar RingEndomorphism::apply_inverse(const Scalar& f) const {
  if (identity_ || f.is_constant()) return f;
  return f.substitute(inverse_images_);
}

Scalar RingEndomorphism::apply_power(const Scalar& f, int k) const {
  Scalar out = f;
  for (int i = 0; i < k; ++i) out = apply(out);
  for (int i = 0; i > k; --i) out = apply_inverse(out);
  return out;
}

CoefficientRing::CoefficientRing() = default;

CoefficientRing::CoefficientRing(RingKind kind, std::vector<std::string> variables,
                                 RingEndomorphism pullback)
    : kind_(kind), variables_(std::move(variables)), pullback_(std::move(pullback)) {
  if (kind_ == RingKind::Rationals && !variables_.empty()) {
    throw InvalidStructureError("the rational ring takes no variables");
  }
  if (kind_ != RingKind::Rationals && variables_.empty()) {
    throw InvalidStructureError("a polynomial ring needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& name : variables_) {
    if (name.empty()) throw InvalidStructureError("variable names must be nonempty");
    if (!seen.insert(name).second) throw InvalidStructureError("duplicate variable '" + name + "'");
  }
  if (pullback_.nvars() != variables_.size()) {
    throw InvalidStructureError("the pullback must give one image per ring variable");
  }
}

RingPtr CoefficientRing::rationals() {
  static const RingPtr q = std::make_shared<const CoefficientRing>();
  return q;
}

RingPtr fraction_field(const RingPtr& ring) {
  if (ring->kind() != RingKind::Polynomial) return ring;
  return std::make_shared<const CoefficientRing>(RingKind::FractionField, ring->variables(),
                                                 ring->pullback());
}

Scalar CoefficientRing::variable(std::size_t index) const {
  if (index >= nvars()) throw DimensionError("variable index out of range");
  return Scalar(Polynomial::variable(index, nvars()));
}

bool CoefficientRing::contains(const Scalar& f) const {
  if (f.is_constant()) return true;
  if (f.nvars() != nvars()) return false;
  switch (kind_) {
    case RingKind::Rationals:
      return false;
    case RingKind::Polynomial:
      return f.is_polynomial();
    case RingKind::FractionField:
      return true;
  }
  return false;
}

Scalar CoefficientRing::divide(const Scalar& a, const Scalar& b) const {
  Scalar q = a / b;
  if (!contains(q)) {
    throw DomainError(format(a) + " is not divisible by " + format(b) + " in " + describe());
  }
  return q;
}

Scalar CoefficientRing::parse(const std::string& text) const {
  Scalar value = parse_expression(text, variables_);
  if (!contains(value)) {
    throw DomainError("'" + text + "' is not an element of " + describe());
  }
  return value;
}

std::string CoefficientRing::describe() const {
  if (kind_ == RingKind::Rationals) return "Q";
  std::string vars;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) vars += ",";
    vars += variables_[i];
  }
  return kind_ == RingKind::Polynomial ? "Q[" + vars + "]" : "Q(" + vars + ")";
}

TwistedDerivation::TwistedDerivation(RingPtr ring, std::vector<Scalar> coefficients,
                                     DerivationTwist twist)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)), twist_(twist) {
  if (!ring_) throw PreconditionError("a derivation needs a coefficient ring");
  if (coefficients_.size() != ring_->nvars()) {
    throw DimensionError("a derivation takes one coefficient per ring variable");
  }
  for (const auto& q : coefficients_) {
    if (!ring_->contains(q)) {
      throw DomainError("derivation coefficient " + ring_->format(q) + " is not in " +
                        ring_->describe());
    }
  }
}

TwistedDerivation TwistedDerivation::zero(RingPtr ring) {
  std::vector<Scalar> coeffs(ring->nvars(), Scalar(0));
  return TwistedDerivation(std::move(ring), std::move(coeffs));
}

bool TwistedDerivation::is_zero() const {
  for (const auto& q : coefficients_) {
    if (!q.is_zero()) return false;
  }
  return true;
}

Scalar TwistedDerivation::operator()(const Scalar& f) const {
  Scalar d(0);
  if (f.is_constant()) return d;
  for (std::size_t v = 0; v < coefficients_.size(); ++v) {
    if (coefficients_[v].is_zero()) continue;
    d += coefficients_[v] * f.derivative(v);
  }
  if (twist_ == DerivationTwist::Identity) return d;
  return ring_->phi(d);
}

TwistedDerivation TwistedDerivation::combine(RingPtr ring, std::span<const Scalar> weights,
                                             std::span<const TwistedDerivation> derivations) {
  if (weights.size() != derivations.size()) {
    throw DimensionError("combine needs one weight per derivation");
  }
  DerivationTwist twist = DerivationTwist::Pullback;
  if (!derivations.empty()) twist = derivations.front().twist();
  std::vector<Scalar> coeffs(ring->nvars(), Scalar(0));
  for (std::size_t k = 0; k < derivations.size(); ++k) {
    if (derivations[k].twist() != twist) {
      throw PreconditionError("cannot combine derivations with different twists");
    }
    if (weights[k].is_zero()) continue;
    // w * (phi∘D) = phi∘(phi^{-1}(w) D)
    const Scalar w = twist == DerivationTwist::Pullback ? ring->phi_inverse(weights[k]) : weights[k];
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
      coeffs[v] += w * derivations[k].coefficients()[v];
    }
  }
  TwistedDerivation out;
  out.ring_ = std::move(ring);
  out.coefficients_ = std::move(coeffs);
  out.twist_ = twist;
  return out;
}

}  // namespace homlie
