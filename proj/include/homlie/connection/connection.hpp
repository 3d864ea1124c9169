#pragma once

#include "homlie/algebroid/report.hpp"
#include "homlie/algebroid/structure.hpp"

namespace homlie {

/// An A-connection given by Gamma with nabla_{e_i} e_j = sum_k Gamma_ij^k e_k,
/// extended by nabla_{fX} Z = phi*(f) nabla_X Z and
/// nabla_X (fZ) = phi*(f) nabla_X Z + a(phi X)(f) phi(Z).
class Connection {
 public:
  Connection(HomAlgebroid algebroid, StructureTable gamma);

  const HomAlgebroid& algebroid() const { return algebroid_; }
  /// The connection read as a product-type hom-algebroid X.Y = nabla_X Y.
  const HomAlgebroid& product() const { return product_; }
  const StructureTable& table() const { return product_.table(); }
  const Section& entry(std::size_t i, std::size_t j) const { return product_.entry(i, j); }
  std::size_t rank() const { return algebroid_.rank(); }

  Section operator()(const Section& x, const Section& y) const { return product_.bracket(x, y); }

  /// Copy with Gamma_ij^k increased by `delta`.
  Connection perturbed(std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) const;

  friend bool operator==(const Connection& a, const Connection& b) { return a.table() == b.table(); }

 private:
  HomAlgebroid algebroid_;
  HomAlgebroid product_;
};

/// Torsion-free metric connection from the twisted Koszul formula, solving
/// 2<nabla_X Y, phi Z> = a(phi X)<Y,Z> + a(phi Y)<Z,X> - a(phi Z)<X,Y>
///                     + <[X,Y], phi Z> + <[Z,X], phi Y> + <[Z,Y], phi X>
/// frame pair by frame pair. Throws SingularSystemError when Phi^T G is singular.
Connection levi_civita(const HomAlgebroid& s, const Matrix& g);

/// "torsion_free": [X,Y] = nabla_X Y - nabla_Y X.
/// "metric_compatible": a(phi X)<Y,Z> = <nabla_X Y, phi Z> + <phi Y, nabla_X Z>.
VerificationReport verify_levi_civita(const HomAlgebroid& s, const Matrix& g, const Connection& c,
                                      const CheckOptions& options = {});

/// nabla^a from omega(nabla^a_X Y, phi Z) = a(phi X) omega(Y,Z) - omega(phi Y, [X,Z]).
Connection left_symmetric_connection(const HomAlgebroid& s, const Matrix& omega);
/// The same connection as flat^{-1} L~_X flat(Y) with flat(X) = omega(X, .).
Connection left_symmetric_connection_via_flat(const HomAlgebroid& s, const Matrix& omega);

/// With T(X,Y) = nabla_X Y - nabla_Y X - [X,Y], on frame tuples:
///   "torsion_identity":  omega(T(X,Y), phi Z) = -a(phi Z) omega(X,Y)
///   "bracket_identity":  omega(phi^2 Z', [T(X,Y), phi Z])
///                        = -a(phi^2 Z) a(phi Z') omega(X,Y)
///                          + a(phi nabla_Z Z') omega(phi X, phi Y)
///   "flatness_identity": nabla_{phi Y} nabla_X Z - nabla_{phi X} nabla_Y Z
///                        + nabla_{nabla_X Y} phi Z - nabla_{nabla_Y X} phi Z
///                        = [T(X,Y), phi Z]
/// followed by "left_symmetric.*" and "hom_algebroid.*" on the product.
VerificationReport verify_symplectic_connection(const HomAlgebroid& s, const Matrix& omega,
                                                const Connection& c, const CheckOptions& options = {});

}  // namespace homlie
