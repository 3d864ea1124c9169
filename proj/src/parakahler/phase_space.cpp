#include "homlie/parakahler/phase_space.hpp"

#include "homlie/algebroid/verify.hpp"
#include "homlie/connection/representation.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.rows();
  Matrix out(m + b.rows(), m + b.rows());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) out(m + i, m + j) = b(i, j);
  }
  return out;
}

bool all_in(const CoefficientRing& ring, const StructureTable& table) {
  for (const auto& row : table) {
    for (const auto& x : row) {
      for (const auto& c : x) {
        if (!ring.contains(c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

HomAlgebroid build_phase_space(const HomAlgebroid& a, const Connection& nabla, const CheckOptions& options) {
  if (a.kind() != StructureKind::Lie) throw PreconditionError("the phase space needs a bracket");
  const Representation rho = Representation::from_connection(nabla);
  const VerificationReport pre = check_representation(rho, options);
  for (const auto& r : pre.results()) {
    if (r.status == CheckStatus::Fail) {
      throw PreconditionError("the connection is not a representation: law '" + r.name + "' fails at " +
                              r.witness + " with residual " + r.residual);
    }
  }
  const Representation dual = dual_representation(rho);
  const std::size_t m = a.rank();
  const HomBundle& ba = a.bundle();
  const HomBundle& bd = dual.target();

  StructureTable table = make_table(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Section xy = a.entry(i, j);
      for (std::size_t k = 0; k < m; ++k) table[i][j][k] = xy[k];
      const Section act = dual(ba.basis(i), bd.basis(j));
      for (std::size_t k = 0; k < m; ++k) {
        table[i][m + j][m + k] = act[k];
        table[m + j][i][m + k] = -act[k];
      }
    }
  }
  RingPtr ring = all_in(a.coefficients(), table) ? a.ring() : fraction_field(a.ring());
  HomBundle bundle(ring, block_diagonal(ba.twist(), bd.twist()),
                   block_diagonal(ba.inverse_twist(), bd.inverse_twist()));
  std::vector<TwistedDerivation> anchors;
  for (const auto& d : a.anchors()) anchors.emplace_back(ring, d.coefficients(), d.twist());
  for (std::size_t j = 0; j < m; ++j) anchors.push_back(TwistedDerivation::zero(ring));
  return HomAlgebroid(std::move(bundle), StructureKind::Lie, std::move(table), std::move(anchors));
}

Matrix canonical_form(std::size_t m) {
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = Scalar(1);
    w(m + i, i) = Scalar(-1);
  }
  return w;
}

VerificationReport check_phase_space(const HomAlgebroid& phase_space, const CheckOptions& options) {
  if (phase_space.rank() % 2 != 0) throw DimensionError("a phase space has even rank");
  VerificationReport report;
  report.append(check_hom_lie_algebroid(phase_space, options).prefixed("hom_lie_algebroid"));
  report.append(
      check_symplectic(phase_space, canonical_form(phase_space.rank() / 2), options).prefixed("symplectic"));
  return report;
}

}  // namespace homlie
