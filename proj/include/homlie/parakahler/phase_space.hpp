#pragma once

#include "homlie/algebroid/report.hpp"
#include "homlie/algebroid/structure.hpp"
#include "homlie/connection/connection.hpp"

namespace homlie {

/// The hom-Lie algebroid on A + A* with
///   [X+alpha, Y+beta] = [X,Y] + nabla~_X beta - nabla~_Y alpha,
///   phi(X+alpha) = phi_A(X) + phi_A^dagger(alpha),  a(X+alpha) = a(X),
/// where nabla~ is the dual of nabla. Frame: e_1..e_m then the dual frame.
/// Throws PreconditionError naming the failing law when nabla is not a
/// representation of A on itself with twist phi_A.
HomAlgebroid build_phase_space(const HomAlgebroid& a, const Connection& nabla,
                               const CheckOptions& options = {});

/// omega(X+alpha, Y+beta) = <beta, X> - <alpha, Y> on the rank-2m double.
Matrix canonical_form(std::size_t m);

/// "hom_lie_algebroid.*" and "symplectic.*" for the phase space and its
/// canonical form.
VerificationReport check_phase_space(const HomAlgebroid& phase_space, const CheckOptions& options = {});

}  // namespace homlie
