#pragma once

#include <functional>
#include <span>

#include "homlie/algebroid/report.hpp"
#include "homlie/algebroid/structure.hpp"
#include "homlie/ring/sampling.hpp"

namespace homlie {

/// Section with random coefficients of degree <= 2 (rationals over Q).
Section random_section(Sampler& sampler, const HomBundle& bundle);

/// x^T M y for a bilinear form given by its Gram matrix.
Scalar pairing(const Matrix& m, const Section& x, const Section& y);

/// Skew-symmetry, multiplicativity phi[X,Y] = [phi X, phi Y] and the
/// circular hom-Jacobi identity on every basis tuple and random sections.
VerificationReport check_hom_lie_algebra(const HomAlgebroid& s, const CheckOptions& options = {});

/// The hom-Lie algebra laws plus the anchor laws: twisted Leibniz property
/// of each a(e_i), the bracket Leibniz rule, phi* a(X) = a(phi X) phi*, and
/// a([X,Y]) phi* = a(phi X) a(Y) - a(phi Y) a(X).
VerificationReport check_hom_lie_algebroid(const HomAlgebroid& s, const CheckOptions& options = {});

/// Closure of span(B) under phi_A and the bracket, decided over the fraction
/// field. Throws PreconditionError when B is linearly dependent.
VerificationReport check_subalgebroid(const HomAlgebroid& s, std::span<const Section> b,
                                      const CheckOptions& options = {});

/// Symmetry, nondegeneracy and <phi X, phi Y> = phi*<X, Y>.
VerificationReport check_metric(const HomAlgebroid& s, const Matrix& g,
                                const CheckOptions& options = {});

/// Antisymmetry, nondegeneracy, phi^dagger omega = omega, the six-term
/// cocycle identity and d^A omega = 0.
VerificationReport check_symplectic(const HomAlgebroid& s, const Matrix& omega,
                                    const CheckOptions& options = {});

using ProductFn = std::function<Section(const Section&, const Section&)>;

/// The three hom-algebroid rules for a product-type structure.
VerificationReport check_hom_algebroid(const HomAlgebroid& s, const CheckOptions& options = {});
/// Same rules for an arbitrary product on the sections of `s`.
VerificationReport check_hom_algebroid(const HomAlgebroid& s, const ProductFn& product,
                                       const CheckOptions& options = {});

/// The Omega-weighted associator condition on every basis 4-tuple:
///   Omega(ass(X,Y,Z) - ass(Y,X,Z), phi^2 Z')
///     = a(phi^2 Z) a(phi Z') Omega(X,Y) - phi* a(Z.Z') Omega(X,Y),
/// with ass(X,Y,Z) = (X.Y).phi(Z) - phi(X).(Y.Z).
VerificationReport check_left_symmetric(const HomAlgebroid& product, const Matrix& omega,
                                        const CheckOptions& options = {});

/// Informational: d^A(d^A w) on frame functions, random functions and
/// random 1-forms. Never fails.
VerificationReport dsquared_report(const HomAlgebroid& s, const CheckOptions& options = {});

}  // namespace homlie
