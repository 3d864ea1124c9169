#pragma once

#include <functional>
#include <memory>

#include "homlie/algebroid/report.hpp"
#include "homlie/connection/connection.hpp"

namespace homlie {

/// rho(X)(v) for X a section of A and v a section of E.
using Action = std::function<Section(const Section& x, const Section& v)>;

/// A candidate representation (E; mu, rho) of a hom-Lie algebroid: a target
/// hom-bundle E whose twist is mu and an action of sections of A on sections
/// of E by first-order operators.
class Representation {
 public:
  Representation(HomAlgebroid algebroid, HomBundle target, Action action);

  /// E = A, mu = phi_A, rho(X) = nabla_X.
  static Representation from_connection(const Connection& c);
  /// E = A, mu = phi_A, rho(X) = [X, .].
  static Representation adjoint(const HomAlgebroid& s);

  const HomAlgebroid& algebroid() const { return *algebroid_; }
  const HomBundle& target() const { return target_; }
  Section operator()(const Section& x, const Section& v) const { return action_(x, v); }
  /// Columns rho(e_i)(eps_b).
  Matrix operator_matrix(std::size_t i) const;

 private:
  std::shared_ptr<const HomAlgebroid> algebroid_;
  HomBundle target_;
  Action action_;
};

/// The three representation laws on frame and random inputs:
///   "anchor": rho(X)(f v) = phi*(f) rho(X) v + a(phi X)(f) mu(v)
///   "twist":  rho(phi X)(mu v) = mu(rho(X) v)
///   "bracket": rho([X,Y])(mu v) = rho(phi X) rho(Y) v - rho(phi Y) rho(X) v
VerificationReport check_representation(const Representation& r, const CheckOptions& options = {});

/// The dual action on E* with twist mu^dagger:
///   <rho~(X) xi, Y> = a(phi X)<xi, mu^{-1} Y> - phi*<xi, rho(phi^{-1} X)(mu^{-1} mu^{-1} Y)>.
Representation dual_representation(const Representation& r);

}  // namespace homlie
