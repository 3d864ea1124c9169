#pragma once

#include <optional>
#include <string>

#include "homlie/linalg/matrix.hpp"
#include "homlie/ring/ring.hpp"

namespace homlie {

/// A section of a rank-n free bundle: its coordinate vector in the frame e_1..e_n.
using Section = Vector;

/// Free hom-bundle of rank n over a coefficient ring. The twist acts by
/// phi_A(e_i) = sum_j Phi_ji e_j and phi_A(f X) = phi*(f) phi_A(X), so on
/// coordinates phi_A(X) = Phi * phi*(X). The inverse twist is
/// phi_A^{-1}(Y) = Psi * (phi*)^{-1}(Y) with Psi the declared inverse table,
/// checked through Phi phi*(Psi) = Id and Psi (phi*)^{-1}(Phi) = Id.
class HomBundle {
 public:
  HomBundle() = default;
  /// When `inverse` is omitted it is computed as (phi*)^{-1}(Phi^{-1}); the
  /// result must then have entries in the ring.
  HomBundle(RingPtr ring, Matrix twist, std::optional<Matrix> inverse = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  const CoefficientRing& coefficients() const { return *ring_; }
  std::size_t rank() const { return twist_.rows(); }
  const Matrix& twist() const { return twist_; }
  const Matrix& inverse_twist() const { return inverse_; }

  Section basis(std::size_t i) const;
  Section zero() const { return Section(rank()); }

  Section phi(const Section& x) const;
  Section phi_inverse(const Section& y) const;
  /// phi_A^k for any integer k.
  Section phi_power(const Section& x, int k) const;

  /// Entrywise phi* and its inverse.
  Section pull(const Section& x) const;
  Section pull_inverse(const Section& x) const;
  Matrix pull(const Matrix& m) const;
  Matrix pull_inverse(const Matrix& m) const;

  /// Matrix of the dual twist phi_A^dagger on coordinates of 1-forms:
  /// <phi^dagger xi, Y> = phi*<xi, phi^{-1} Y>, so phi^dagger(xi) = D phi*(xi)
  /// with D = phi*(Psi)^T.
  Matrix dual_twist() const;

  std::string format(const Section& x) const;

 private:
  RingPtr ring_;
  Matrix twist_;
  Matrix inverse_;
};

/// f * X.
Section scale(const Scalar& f, const Section& x);

}  // namespace homlie
