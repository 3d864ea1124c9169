#include "homlie/connection/connection.hpp"

#include <string>

#include "homlie/algebroid/calculus.hpp"
#include "homlie/algebroid/verify.hpp"
#include "homlie/errors.hpp"

namespace homlie {

Connection::Connection(HomAlgebroid algebroid, StructureTable gamma)
    : algebroid_(std::move(algebroid)),
      product_(over_fraction_field(algebroid_).with_table(StructureKind::Product, std::move(gamma))) {}

Connection Connection::perturbed(std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) const {
  StructureTable gamma = table();
  gamma.at(i).at(j).at(k) += delta;
  return Connection(algebroid_, std::move(gamma));
}

namespace {

/// Solves M u = rhs for every frame pair (i, j) at once; column i*n+j of rhs.
StructureTable solve_pairs(const Matrix& m, const Matrix& rhs, const std::string& what) {
  const std::size_t n = m.rows();
  if (m.determinant().is_zero()) {
    throw SingularSystemError(what + " is singular over the fraction field (rank " +
                              std::to_string(m.rank()) + " of " + std::to_string(n) + ")");
  }
  const Matrix u = m.solve(rhs);
  StructureTable gamma = make_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gamma[i][j] = u.column(i * n + j);
  }
  return gamma;
}

}  // namespace

Connection levi_civita(const HomAlgebroid& s, const Matrix& g) {
  if (s.kind() != StructureKind::Lie) throw PreconditionError("levi_civita needs a bracket");
  const std::size_t n = s.rank();
  if (g.rows() != n || g.cols() != n) throw DimensionError("metric must be rank x rank");
  const HomBundle& b = s.bundle();
  const Matrix& phi = b.twist();
  auto ip = [&](const Section& x, const Section& y) { return pairing(g, x, y); };
  std::vector<Section> e(n), pe(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = b.basis(i);
    pe[i] = s.phi(e[i]);
  }
  Matrix rhs(n, n * n);
  const Scalar half(Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Section xy = s.bracket(e[i], e[j]);
      for (std::size_t k = 0; k < n; ++k) {
        Scalar r = s.anchor_apply(pe[i], g(j, k)) + s.anchor_apply(pe[j], g(k, i)) -
                   s.anchor_apply(pe[k], g(i, j)) + ip(xy, pe[k]) + ip(s.bracket(e[k], e[i]), pe[j]) +
                   ip(s.bracket(e[k], e[j]), pe[i]);
        rhs(k, i * n + j) = half * r;
      }
    }
  }
  return Connection(s, solve_pairs(phi.transpose() * g, rhs, "the Koszul system Phi^T G"));
}

VerificationReport verify_levi_civita(const HomAlgebroid& s, const Matrix& g, const Connection& c,
                                      const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  const std::size_t n = s.rank();
  auto ip = [&](const Section& x, const Section& y) { return pairing(g, x, y); };
  auto torsion = [&](const Section& x, const Section& y) { return s.bracket(x, y) - (c(x, y) - c(y, x)); };
  auto compat = [&](const Section& x, const Section& y, const Section& z) {
    return s.anchor_apply(s.phi(x), ip(y, z)) - ip(c(x, y), s.phi(z)) - ip(s.phi(y), c(x, z));
  };
  Law tf("torsion_free");
  Law mc("metric_compatible");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tf.record(torsion(b.basis(i), b.basis(j)), [&] { return basis_tuple({i, j}); }, ring);
      for (std::size_t k = 0; k < n; ++k) {
        mc.record(compat(b.basis(i), b.basis(j), b.basis(k)), [&] { return basis_tuple({i, j, k}); },
                  ring);
      }
    }
  }
  Sampler sampler(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    const Section z = random_section(sampler, b);
    auto w = [k] { return "random sample " + std::to_string(k + 1); };
    tf.record(torsion(x, y), w, ring);
    mc.record(compat(x, y, z), w, ring);
  }
  report.add(tf.finish());
  report.add(mc.finish());
  return report;
}

Connection left_symmetric_connection(const HomAlgebroid& s, const Matrix& omega) {
  const std::size_t n = s.rank();
  if (omega.rows() != n || omega.cols() != n) throw DimensionError("symplectic form must be rank x rank");
  const HomBundle& b = s.bundle();
  auto w = [&](const Section& x, const Section& y) { return pairing(omega, x, y); };
  Matrix rhs(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Section pe = s.phi(b.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Section py = s.phi(b.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        rhs(k, i * n + j) =
            s.anchor_apply(pe, omega(j, k)) - w(py, s.bracket(b.basis(i), b.basis(k)));
      }
    }
  }
  const Matrix m = b.twist().transpose() * omega.transpose();
  return Connection(s, solve_pairs(m, rhs, "the system omega(., phi Z)"));
}

Connection left_symmetric_connection_via_flat(const HomAlgebroid& s, const Matrix& omega) {
  const std::size_t n = s.rank();
  if (omega.rows() != n || omega.cols() != n) throw DimensionError("symplectic form must be rank x rank");
  const Matrix flat = omega.transpose();
  if (flat.determinant().is_zero()) throw SingularSystemError("symplectic form is degenerate");
  StructureTable gamma = make_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Section x = s.bundle().basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Form lx = lie_derivative_form(s, x, covector(omega.row(j)));
      gamma[i][j] = flat.solve(Vector(lx.values().begin(), lx.values().end()));
    }
  }
  return Connection(s, std::move(gamma));
}

VerificationReport verify_symplectic_connection(const HomAlgebroid& s, const Matrix& omega,
                                                const Connection& c, const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  const std::size_t n = s.rank();
  auto w = [&](const Section& x, const Section& y) { return pairing(omega, x, y); };
  std::vector<Section> e(n), pe(n), ppe(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = b.basis(i);
    pe[i] = s.phi(e[i]);
    ppe[i] = s.phi(pe[i]);
  }
  StructureTable torsion = make_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) torsion[i][j] = c(e[i], e[j]) - c(e[j], e[i]) - s.bracket(e[i], e[j]);
  }

  Law first("torsion_identity");
  Law second("bracket_identity");
  Law third("flatness_identity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar wxy = omega(i, j);
      const Scalar wpxpy = w(pe[i], pe[j]);
      const Section nxy = c(e[i], e[j]);
      const Section nyx = c(e[j], e[i]);
      for (std::size_t k = 0; k < n; ++k) {
        first.record(w(torsion[i][j], pe[k]) + s.anchor_apply(pe[k], wxy),
                     [&] { return basis_tuple({i, j, k}); }, ring);
        const Section tz = s.bracket(torsion[i][j], pe[k]);
        const Section lhs = c(pe[j], c(e[i], e[k])) - c(pe[i], c(e[j], e[k])) + c(nxy, pe[k]) - c(nyx, pe[k]);
        third.record(lhs - tz, [&] { return basis_tuple({i, j, k}); }, ring);
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar rhs = s.anchor_apply(s.phi(c(e[k], e[l])), wpxpy) -
                             s.anchor_apply(ppe[k], s.anchor_apply(pe[l], wxy));
          second.record(w(ppe[l], tz) - rhs, [&] { return basis_tuple({i, j, k, l}); }, ring);
        }
      }
    }
  }
  if (second.failed() && !first.failed() && !third.failed()) {
    second.set_detail("fails while the torsion and flatness identities hold");
  }
  report.add(first.finish());
  report.add(second.finish());
  report.add(third.finish());
  report.append(check_left_symmetric(c.product(), omega, options).prefixed("left_symmetric"));
  report.append(check_hom_algebroid(c.product(), options).prefixed("hom_algebroid"));
  return report;
}

}  // namespace homlie
