#include "homlie/parakahler/parakahler.hpp"

#include <string>

#include "homlie/algebroid/subbundle.hpp"
#include "homlie/algebroid/verify.hpp"
#include "homlie/connection/representation.hpp"
#include "homlie/errors.hpp"
#include "homlie/parakahler/phase_space.hpp"

namespace homlie {

namespace {

std::string sample(std::size_t k) { return "random sample " + std::to_string(k + 1); }

std::string frame_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

void require_square(const HomAlgebroid& s, const Matrix& m, const char* what) {
  if (m.rows() != s.rank() || m.cols() != s.rank()) {
    throw DimensionError(std::string(what) + " must be rank x rank");
  }
}

bool identity_pullback(const HomAlgebroid& s) { return s.coefficients().pullback().is_identity(); }

}  // namespace

Matrix AdaptedSplit::basis_change(std::size_t rank) const {
  std::vector<Vector> cols(plus.begin(), plus.end());
  cols.insert(cols.end(), minus.begin(), minus.end());
  return Matrix::from_columns(cols, rank);
}

Section product_operator(const HomAlgebroid& s, const Matrix& k, const Section& x) { return s.phi(k * x); }

Matrix product_matrix(const HomAlgebroid& s, const Matrix& k) {
  require_square(s, k, "K");
  return s.bundle().twist() * s.bundle().pull(k);
}

VerificationReport check_almost_product(const HomAlgebroid& s, const Matrix& k, const CheckOptions&) {
  require_square(s, k, "K");
  VerificationReport report;
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  Law square("square");
  Law commutes("commutes");
  for (std::size_t i = 0; i < n; ++i) {
    const Section e = s.bundle().basis(i);
    const Section p = product_operator(s, k, e);
    square.record(product_operator(s, k, p) - e, [&] { return basis_tuple({i}); }, ring);
    commutes.record(p - k * s.phi(e), [&] { return basis_tuple({i}); }, ring);
  }
  report.add(square.finish());
  report.add(commutes.finish());
  return report;
}

AdaptedSplit compute_split(const HomAlgebroid& s, const Matrix& k) {
  if (s.coefficients().kind() != RingKind::Rationals) {
    throw PreconditionError("eigen-frames are computed only over Q; declare the split for " +
                            s.coefficients().describe());
  }
  const std::size_t n = s.rank();
  const Matrix p = product_matrix(s, k);
  const Matrix id = Matrix::identity(n);
  AdaptedSplit split{(p - id).nullspace(), (p + id).nullspace()};
  if (split.n_plus() + split.n_minus() != n) {
    throw PreconditionError("the eigen-summands of phi_A∘K have dimensions " + std::to_string(split.n_plus()) +
                            " and " + std::to_string(split.n_minus()) + ", which do not add up to the rank " +
                            std::to_string(n));
  }
  return split;
}

VerificationReport verify_split(const HomAlgebroid& s, const Matrix& k, const AdaptedSplit& split) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  auto check = [&](const char* name, const std::vector<Section>& frame, int sign, const char* prefix) {
    Law law(name);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (frame[i].size() != n) throw DimensionError("split frame sections must have rank entries");
      law.record(product_operator(s, k, frame[i]) - scale(Scalar(sign), frame[i]),
                 [&] { return frame_name(prefix, i); }, ring);
    }
    if (frame.empty()) law.record(Scalar(0), [] { return std::string(); }, ring);
    report.add(law.finish());
  };
  check("plus_eigen", split.plus, 1, "b");
  check("minus_eigen", split.minus, -1, "c");
  Law complete("complete");
  const std::size_t r = split.basis_change(n).rank();
  if (split.n_plus() + split.n_minus() != n || r != n) {
    complete.fail("", "the frames span rank " + std::to_string(r) + " with " +
                          std::to_string(split.n_plus() + split.n_minus()) + " sections, rank is " +
                          std::to_string(n));
  } else {
    complete.record(Scalar(0), [] { return std::string(); }, ring);
    complete.set_detail("dimensions (" + std::to_string(split.n_plus()) + ", " + std::to_string(split.n_minus()) +
                        ")");
  }
  report.add(complete.finish());
  return report;
}

AdaptedSplit resolve_split(const HomAlgebroid& s, const Matrix& k, const std::optional<AdaptedSplit>& declared) {
  if (!declared) return compute_split(s, k);
  const VerificationReport report = verify_split(s, k, *declared);
  for (const auto& r : report.results()) {
    if (r.status == CheckStatus::Fail) {
      throw PreconditionError("declared split fails '" + r.name + "'" +
                              (r.witness.empty() ? std::string() : " at " + r.witness));
    }
  }
  return *declared;
}

std::pair<Matrix, Matrix> projectors(const HomAlgebroid& s, const Matrix& k) {
  if (!identity_pullback(s)) throw PreconditionError("projectors need the identity pullback");
  const std::size_t n = s.rank();
  const Matrix p = product_matrix(s, k);
  const Matrix id = Matrix::identity(n);
  const Scalar half(Rational(1, 2));
  return {half * (id + p), half * (id - p)};
}

Section nijenhuis(const HomAlgebroid& s, const Matrix& k, const Section& x, const Section& y) {
  if (s.kind() != StructureKind::Lie) throw PreconditionError("the Nijenhuis torsion needs a bracket");
  auto p = [&](const Section& v) { return product_operator(s, k, v); };
  const Section px = p(x);
  const Section py = p(y);
  return s.bracket(px, py) - p(s.bracket(px, y)) - p(s.bracket(x, py)) + s.bracket(x, y);
}

StructureTable nijenhuis_table(const HomAlgebroid& s, const Matrix& k) {
  const std::size_t n = s.rank();
  StructureTable out = make_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = nijenhuis(s, k, s.bundle().basis(i), s.bundle().basis(j));
  }
  return out;
}

VerificationReport check_para_complex(const HomAlgebroid& s, const Matrix& k,
                                      const std::optional<AdaptedSplit>& declared, const CheckOptions& options) {
  VerificationReport report = check_almost_product(s, k, options).prefixed("almost_product");
  Law dims("equal_dimensions");
  try {
    const AdaptedSplit split = declared ? *declared : compute_split(s, k);
    report.append(verify_split(s, k, split).prefixed("split"));
    if (!split.para_complex()) {
      dims.fail("", "eigen-summands have dimensions (" + std::to_string(split.n_plus()) + ", " +
                        std::to_string(split.n_minus()) + ")");
    } else {
      dims.record(Scalar(0), [] { return std::string(); }, s.coefficients());
      dims.set_detail("dimensions (" + std::to_string(split.n_plus()) + ", " + std::to_string(split.n_minus()) +
                      ")");
    }
  } catch (const PreconditionError& e) {
    Law law("split.complete");
    law.fail("", e.what());
    report.add(law.finish());
    dims.fail("", "no split available");
  }
  report.add(dims.finish());
  return report;
}

VerificationReport check_para_hermitian(const HomAlgebroid& s, const Matrix& g, const Matrix& k,
                                        const std::optional<AdaptedSplit>& declared, const CheckOptions& options) {
  VerificationReport report = check_para_complex(s, k, declared, options);
  report.append(check_metric(s, g, options).prefixed("metric"));
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  const HomBundle& b = s.bundle();

  Law compat("compatibility");
  for (std::size_t i = 0; i < n; ++i) {
    const Section pi = product_operator(s, k, b.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Section pj = product_operator(s, k, b.basis(j));
      compat.record(pairing(g, pi, pj) + g(i, j), [&] { return basis_tuple({i, j}); }, ring);
    }
  }
  report.add(compat.finish());

  Law integrable("integrability");
  const StructureTable table = nijenhuis_table(s, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      integrable.record(table[i][j], [&] { return basis_tuple({i, j}); }, ring);
    }
  }
  report.add(integrable.finish());

  // N(f e_i, e_j) against phi*^2(f) N(e_i, e_j), measured only.
  Law multiples("integrability.function_multiples");
  multiples.set_info();
  Sampler sampler(options.seed);
  for (std::size_t t = 0; t < options.samples; ++t) {
    const std::size_t i = static_cast<std::size_t>(sampler.integer(0, static_cast<long>(n) - 1));
    const std::size_t j = static_cast<std::size_t>(sampler.integer(0, static_cast<long>(n) - 1));
    const Scalar f = sampler.element(ring);
    const Section lhs = nijenhuis(s, k, scale(f, b.basis(i)), b.basis(j));
    multiples.record(lhs - scale(ring.phi(ring.phi(f)), table[i][j]),
                     [&] { return basis_tuple({i, j}) + ", f = " + ring.format(f); }, ring);
  }
  report.add(multiples.finish());
  return report;
}

Matrix fundamental_form(const HomAlgebroid& s, const Matrix& g, const Matrix& k) {
  require_square(s, g, "metric");
  return product_matrix(s, k).transpose() * g;
}

Matrix fundamental_form(const ParaKahlerData& d) { return fundamental_form(d.structure, d.metric, d.k); }

ParaKahlerCheck check_para_kahler(const HomAlgebroid& s, const Matrix& g, const Matrix& k,
                                  const std::optional<AdaptedSplit>& declared, const CheckOptions& options) {
  ParaKahlerCheck out;
  out.report = check_para_hermitian(s, g, k, declared, options);
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  const HomBundle& b = s.bundle();
  std::optional<Connection> nabla;
  try {
    nabla = levi_civita(s, g);
  } catch (const SingularSystemError& e) {
    Law law("levi_civita.solve");
    law.fail("", e.what());
    out.report.add(law.finish());
    return out;
  }
  out.report.append(verify_levi_civita(s, g, *nabla, options).prefixed("levi_civita"));
  const Connection& c = *nabla;
  auto p = [&](const Section& v) { return product_operator(s, k, v); };

  Law parallel("parallel");
  Law along("parallel_along");
  Law inverse("parallel_inverse");
  for (std::size_t i = 0; i < n; ++i) {
    const Section x = b.basis(i);
    const Section px = p(x);
    for (std::size_t j = 0; j < n; ++j) {
      const Section y = b.basis(j);
      const Section py = p(y);
      auto w = [&] { return basis_tuple({i, j}); };
      parallel.record(c(x, py) - p(c(x, y)), w, ring);
      along.record(c(px, py) - p(c(px, y)), w, ring);
      inverse.record(c(x, y) - p(c(x, py)), w, ring);
    }
  }
  if (identity_pullback(s)) {
    Sampler sampler(options.seed);
    for (std::size_t t = 0; t < options.samples; ++t) {
      const Section x = random_section(sampler, b);
      const Section y = random_section(sampler, b);
      parallel.record(c(x, p(y)) - p(c(x, y)), [&] { return sample(t); }, ring);
    }
  }
  out.report.add(parallel.finish());
  out.report.add(along.finish());
  out.report.add(inverse.finish());
  if (!out.report.passed()) return out;
  out.data = ParaKahlerData{s, g, k, c, resolve_split(s, k, declared)};
  return out;
}

namespace {

/// The associator condition with X, Y, Z drawn from a summand frame and Z' from the full frame.
CheckResult left_symmetric_on(const HomAlgebroid& product, const Matrix& omega, const std::vector<Section>& sub,
                              const std::string& name) {
  const auto& ring = product.coefficients();
  const HomBundle& b = product.bundle();
  const std::size_t n = product.rank();
  auto w = [&](const Section& x, const Section& y) { return pairing(omega, x, y); };
  auto ass = [&](const Section& x, const Section& y, const Section& z) {
    return product.bracket(product.bracket(x, y), product.phi(z)) - product.bracket(product.phi(x), product.bracket(y, z));
  };
  Law law(name);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = 0; j < sub.size(); ++j) {
      const Scalar wxy = w(sub[i], sub[j]);
      for (std::size_t k = 0; k < sub.size(); ++k) {
        const Section diff = ass(sub[i], sub[j], sub[k]) - ass(sub[j], sub[i], sub[k]);
        const Section ppz = b.phi_power(sub[k], 2);
        for (std::size_t l = 0; l < n; ++l) {
          const Section zp = b.basis(l);
          const Scalar lhs = w(diff, b.phi_power(zp, 2));
          const Scalar rhs = product.anchor_apply(ppz, product.anchor_apply(product.phi(zp), wxy)) -
                             ring.phi(product.anchor_apply(product.bracket(sub[k], zp), wxy));
          law.record(lhs - rhs, [&] {
            return "(" + frame_name("b", i) + "," + frame_name("b", j) + "," + frame_name("b", k) + "," +
                   frame_name("e", l) + ")";
          }, ring);
        }
      }
    }
  }
  return law.finish();
}

}  // namespace

VerificationReport verify_parakahler_suite(const ParaKahlerData& d, const CheckOptions& options) {
  VerificationReport report;
  const HomAlgebroid& s = d.structure;
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  const std::size_t n = s.rank();
  const Connection& c = d.levi_civita;
  const AdaptedSplit& split = d.split;
  const SubFrame plus(n, split.plus);
  const SubFrame minus(n, split.minus);
  const Matrix omega = fundamental_form(d);
  auto g = [&](const Section& x, const Section& y) { return pairing(d.metric, x, y); };

  Law nij("nijenhuis");
  const StructureTable table = nijenhuis_table(s, d.k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) nij.record(table[i][j], [&] { return basis_tuple({i, j}); }, ring);
  }
  report.add(nij.finish());

  struct Part {
    const char* name;
    const char* prefix;
    const SubFrame* frame;
  };
  const Part parts[] = {{"plus", "b", &plus}, {"minus", "c", &minus}};

  Law iso("isotropic");
  for (const auto& part : parts) {
    const auto& f = part.frame->sections();
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i; j < f.size(); ++j) {
        iso.record(g(f[i], f[j]), [&] {
          return std::string(part.name) + " (" + frame_name(part.prefix, i) + "," + frame_name(part.prefix, j) + ")";
        }, ring);
      }
    }
  }
  report.add(iso.finish());

  Law lag("lagrangian");
  for (const auto& part : parts) {
    const auto& f = part.frame->sections();
    Matrix restricted(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) restricted(i, j) = pairing(omega, f[i], f[j]);
    }
    lag.record(restricted, [&] { return std::string(part.name) + " restriction of Omega"; }, ring);
    if (2 * f.size() != n) {
      lag.fail(part.name, "summand of dimension " + std::to_string(f.size()) + " in rank " + std::to_string(n));
    }
  }
  report.add(lag.finish());

  Law conn_split("connection_preserves_split");
  Law twist_split("twist_preserves_split");
  for (const auto& part : parts) {
    const auto& f = part.frame->sections();
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Section image = s.phi(f[j]);
      if (!part.frame->contains(image)) {
        twist_split.fail("phi(" + frame_name(part.prefix, j) + ")", "leaves the " + std::string(part.name) +
                                                                         " summand: " + b.format(image));
      } else {
        twist_split.record(Scalar(0), [] { return std::string(); }, ring);
      }
      for (std::size_t i = 0; i < n; ++i) {
        const Section v = c(b.basis(i), f[j]);
        if (!part.frame->contains(v)) {
          conn_split.fail("nabla_e" + std::to_string(i + 1) + " " + frame_name(part.prefix, j),
                          "leaves the " + std::string(part.name) + " summand: " + b.format(v));
        } else {
          conn_split.record(Scalar(0), [] { return std::string(); }, ring);
        }
      }
    }
  }
  report.add(conn_split.finish());
  report.add(twist_split.finish());

  report.append(check_para_hermitian(s, d.metric, d.k, split, options).prefixed("para_hermitian"));

  {
    const auto& fp = plus.sections();
    const auto& fm = minus.sections();
    Law iso_dual("duality.isomorphism");
    Matrix pm(fm.size(), fp.size());
    for (std::size_t a = 0; a < fm.size(); ++a) {
      for (std::size_t j = 0; j < fp.size(); ++j) pm(a, j) = g(fm[a], fp[j]);
    }
    if (!pm.is_square() || pm.determinant().is_zero()) {
      iso_dual.fail("", "the pairing of the minus summand with the plus summand is degenerate");
    } else {
      iso_dual.record(Scalar(0), [] { return std::string(); }, ring);
    }
    report.add(iso_dual.finish());
    Law inter("duality.intertwines");
    for (std::size_t a = 0; a < fm.size(); ++a) {
      for (std::size_t j = 0; j < fp.size(); ++j) {
        inter.record(g(s.phi(fm[a]), fp[j]) - ring.phi(g(fm[a], s.phi_inverse(fp[j]))),
                     [&] { return "(" + frame_name("c", a) + "," + frame_name("b", j) + ")"; }, ring);
      }
    }
    report.add(inter.finish());
  }

  std::optional<Connection> nabla_a;
  try {
    nabla_a = left_symmetric_connection(s, omega);
  } catch (const SingularSystemError& e) {
    Law law("connection_agreement");
    law.fail("", e.what());
    report.add(law.finish());
  }
  if (nabla_a) {
    Law agree("connection_agreement");
    for (const auto& part : parts) {
      const auto& f = part.frame->sections();
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          agree.record(c(f[i], f[j]) - (*nabla_a)(f[i], f[j]), [&] {
            return std::string(part.name) + " (" + frame_name(part.prefix, i) + "," + frame_name(part.prefix, j) + ")";
          }, ring);
        }
      }
    }
    report.add(agree.finish());
  }

  for (const auto& part : parts) {
    const std::string name = part.name;
    report.append(check_subalgebroid(s, part.frame->sections(), options).prefixed("subalgebroid." + name));
    if (nabla_a) {
      report.add(left_symmetric_on(nabla_a->product(), omega, part.frame->sections(),
                                   "left_symmetric_summands." + name));
    }
    try {
      const HomAlgebroid sub = restrict_structure(s, *part.frame);
      report.append(check_hom_lie_algebroid(sub, options).prefixed("restricted." + name));
      const HomAlgebroid sub_conn = restrict_structure(c.product(), *part.frame);
      const Connection restricted(sub, sub_conn.table());
      report.append(check_representation(Representation::from_connection(restricted), options)
                        .prefixed("representation." + name));
      if (name == "plus") {
        const HomAlgebroid phase = build_phase_space(sub, restricted, options);
        report.append(check_phase_space(phase, options).prefixed("phase_space"));
      }
    } catch (const PreconditionError& e) {
      Law law("restricted." + name);
      law.fail("", e.what());
      report.add(law.finish());
    }
  }

  report.append(check_symplectic(s, omega, options).prefixed("fundamental_form"));
  return report;
}

}  // namespace homlie
