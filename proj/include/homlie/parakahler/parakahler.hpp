#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlie/algebroid/report.hpp"
#include "homlie/algebroid/structure.hpp"
#include "homlie/connection/connection.hpp"

namespace homlie {

/// Frames of the +1 and -1 eigen-summands of P = phi_A∘K.
struct AdaptedSplit {
  std::vector<Section> plus;
  std::vector<Section> minus;

  std::size_t n_plus() const { return plus.size(); }
  std::size_t n_minus() const { return minus.size(); }
  bool para_complex() const { return n_plus() == n_minus(); }
  /// Columns: the plus frame followed by the minus frame.
  Matrix basis_change(std::size_t rank) const;
};

/// P(X) = phi_A(K X).
Section product_operator(const HomAlgebroid& s, const Matrix& k, const Section& x);
/// Matrix of P on frame sections: Phi phi*(K).
Matrix product_matrix(const HomAlgebroid& s, const Matrix& k);

/// "square": P^2 = Id on frame sections. "commutes": phi_A∘K = K∘phi_A.
VerificationReport check_almost_product(const HomAlgebroid& s, const Matrix& k,
                                        const CheckOptions& options = {});

/// Eigen-frames of P computed by exact nullspaces. Needs the identity pullback;
/// throws PreconditionError otherwise or when the eigen-summands do not span.
AdaptedSplit compute_split(const HomAlgebroid& s, const Matrix& k);
/// "plus_eigen", "minus_eigen" and "complete" (the frames together span A).
VerificationReport verify_split(const HomAlgebroid& s, const Matrix& k, const AdaptedSplit& split);
/// The declared split after verification, otherwise the computed one.
AdaptedSplit resolve_split(const HomAlgebroid& s, const Matrix& k,
                           const std::optional<AdaptedSplit>& declared);

/// (1/2)(Id + P) and (1/2)(Id - P); needs the identity pullback.
std::pair<Matrix, Matrix> projectors(const HomAlgebroid& s, const Matrix& k);

/// N(X,Y) = [PX,PY] - P[PX,Y] - P[X,PY] + [X,Y].
Section nijenhuis(const HomAlgebroid& s, const Matrix& k, const Section& x, const Section& y);
/// N(e_i, e_j) for all frame pairs.
StructureTable nijenhuis_table(const HomAlgebroid& s, const Matrix& k);

/// Almost product laws, split verification and "equal_dimensions".
VerificationReport check_para_complex(const HomAlgebroid& s, const Matrix& k,
                                      const std::optional<AdaptedSplit>& declared,
                                      const CheckOptions& options = {});

/// Layers: "almost_product.*", "split.*", "equal_dimensions", "metric.*",
/// "compatibility" (<PX,PY> = -<X,Y>), "integrability" (N = 0 on frame
/// pairs) and the informational "integrability.function_multiples".
VerificationReport check_para_hermitian(const HomAlgebroid& s, const Matrix& g, const Matrix& k,
                                        const std::optional<AdaptedSplit>& declared,
                                        const CheckOptions& options = {});

struct ParaKahlerData {
  HomAlgebroid structure;
  Matrix metric;
  Matrix k;
  Connection levi_civita;
  AdaptedSplit split;
};

struct ParaKahlerCheck {
  VerificationReport report;
  std::optional<ParaKahlerData> data;
};

/// The para-Hermitian layers, "levi_civita.*", "parallel"
/// (nabla_X P Y = P nabla_X Y) and the two consequences "parallel_along"
/// and "parallel_inverse". Data is assembled only when everything passes.
ParaKahlerCheck check_para_kahler(const HomAlgebroid& s, const Matrix& g, const Matrix& k,
                                  const std::optional<AdaptedSplit>& declared,
                                  const CheckOptions& options = {});

/// Omega(X,Y) = <P X, Y>, i.e. the matrix (Phi phi*(K))^T G.
Matrix fundamental_form(const HomAlgebroid& s, const Matrix& g, const Matrix& k);
Matrix fundamental_form(const ParaKahlerData& d);

/// Every structural consequence of a para-Kahler structure: "nijenhuis",
/// "isotropic", "lagrangian", "connection_preserves_split",
/// "twist_preserves_split", "para_hermitian.*", "duality.*",
/// "connection_agreement", "subalgebroid.*", "left_symmetric_summands",
/// "restricted.*", "fundamental_form.*", "representation.*" and
/// "phase_space.*".
VerificationReport verify_parakahler_suite(const ParaKahlerData& d, const CheckOptions& options = {});

}  // namespace homlie
