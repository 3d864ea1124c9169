#include "homlie/algebroid/verify.hpp"

#include <string>

#include "homlie/algebroid/calculus.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::string sample(std::size_t k) { return "random sample " + std::to_string(k + 1); }

std::string with_function(const std::string& tuple, const CoefficientRing& ring, const Scalar& f) {
  return tuple + ", f = " + ring.format(f);
}

/// Generators x_1..x_k followed by `extra` random elements.
std::vector<Scalar> probe_functions(const CoefficientRing& ring, Sampler& sampler, std::size_t extra) {
  std::vector<Scalar> out;
  for (std::size_t v = 0; v < ring.nvars(); ++v) out.push_back(ring.variable(v));
  if (ring.nvars() == 0) return {Scalar(1)};
  for (std::size_t k = 0; k < extra; ++k) out.push_back(sampler.element(ring));
  return out;
}

Section jacobi_sum(const HomAlgebroid& s, const Section& x, const Section& y, const Section& z) {
  return s.bracket(s.phi(x), s.bracket(y, z)) + s.bracket(s.phi(y), s.bracket(z, x)) +
         s.bracket(s.phi(z), s.bracket(x, y));
}

void add_algebra_laws(const HomAlgebroid& s, const CheckOptions& options, VerificationReport& report) {
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  const HomBundle& b = s.bundle();
  Sampler sampler(options.seed);

  Law skew("skew");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      skew.record(s.bracket(b.basis(i), b.basis(j)) + s.bracket(b.basis(j), b.basis(i)),
                  [&] { return basis_tuple({i, j}); }, ring);
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    skew.record(s.bracket(x, y) + s.bracket(y, x), [&] { return sample(k); }, ring);
  }
  report.add(skew.finish());

  Law mult("multiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mult.record(s.phi(s.bracket(b.basis(i), b.basis(j))) -
                      s.bracket(s.phi(b.basis(i)), s.phi(b.basis(j))),
                  [&] { return basis_tuple({i, j}); }, ring);
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    mult.record(s.phi(s.bracket(x, y)) - s.bracket(s.phi(x), s.phi(y)), [&] { return sample(k); },
                ring);
  }
  report.add(mult.finish());

  Law jacobi("jacobi");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        jacobi.record(jacobi_sum(s, b.basis(i), b.basis(j), b.basis(l)),
                      [&] { return basis_tuple({i, j, l}); }, ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    const Section z = random_section(sampler, b);
    jacobi.record(jacobi_sum(s, x, y, z), [&] { return sample(k); }, ring);
  }
  report.add(jacobi.finish());
}

CheckResult anchor_compatibility(const HomAlgebroid& s, const CheckOptions& options) {
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  Sampler sampler(options.seed ^ 0x5A5A5A5AULL);
  Law law("anchor.compatibility");
  const auto fs = probe_functions(ring, sampler, 3);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const Section x = b.basis(i);
    for (const auto& f : fs) {
      law.record(ring.phi(s.anchor_apply(x, f)) - s.anchor_apply(s.phi(x), ring.phi(f)),
                 [&] { return with_function(basis_tuple({i}), ring, f); }, ring);
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Scalar f = sampler.element(ring);
    law.record(ring.phi(s.anchor_apply(x, f)) - s.anchor_apply(s.phi(x), ring.phi(f)),
               [&] { return sample(k); }, ring);
  }
  return law.finish();
}

}  // namespace

Section random_section(Sampler& sampler, const HomBundle& bundle) {
  Section x(bundle.rank());
  for (auto& c : x) c = sampler.element(bundle.coefficients());
  return x;
}

Scalar pairing(const Matrix& m, const Section& x, const Section& y) { return dot(x, m * y); }

VerificationReport check_hom_lie_algebra(const HomAlgebroid& s, const CheckOptions& options) {
  VerificationReport report;
  if (s.kind() != StructureKind::Lie) {
    Law law("lie_type");
    law.fail("", "structure is product-type, not a bracket");
    report.add(law.finish());
    return report;
  }
  add_algebra_laws(s, options, report);
  return report;
}

VerificationReport check_hom_lie_algebroid(const HomAlgebroid& s, const CheckOptions& options) {
  VerificationReport report = check_hom_lie_algebra(s, options);
  if (s.kind() != StructureKind::Lie) return report;
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  const std::size_t n = s.rank();
  Sampler sampler(options.seed ^ 0xC3C3C3C3ULL);

  Law twisted("anchor.twisted_leibniz");
  for (std::size_t i = 0; i < n; ++i) {
    const TwistedDerivation& a = s.anchors()[i];
    const auto fs = probe_functions(ring, sampler, 2);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        twisted.record(a(f * g) - a(f) * ring.phi(g) - ring.phi(f) * a(g),
                       [&] { return with_function(basis_tuple({i}), ring, f) + ", g = " + ring.format(g); },
                       ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const TwistedDerivation a = s.anchor(random_section(sampler, b));
    const Scalar f = sampler.element(ring);
    const Scalar g = sampler.element(ring);
    twisted.record(a(f * g) - a(f) * ring.phi(g) - ring.phi(f) * a(g), [&] { return sample(k); }, ring);
  }
  report.add(twisted.finish());

  Law leibniz("leibniz_rule");
  const auto fs = probe_functions(ring, sampler, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Section x = b.basis(i);
      const Section y = b.basis(j);
      for (const auto& f : fs) {
        const Section lhs = s.bracket(x, scale(f, y));
        const Section rhs = scale(ring.phi(f), s.bracket(x, y)) + scale(s.anchor_apply(s.phi(x), f), s.phi(y));
        leibniz.record(lhs - rhs, [&] { return with_function(basis_tuple({i, j}), ring, f); }, ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    const Scalar f = sampler.element(ring);
    const Section lhs = s.bracket(x, scale(f, y));
    const Section rhs = scale(ring.phi(f), s.bracket(x, y)) + scale(s.anchor_apply(s.phi(x), f), s.phi(y));
    leibniz.record(lhs - rhs, [&] { return sample(k); }, ring);
  }
  report.add(leibniz.finish());

  report.add(anchor_compatibility(s, options));

  Law law("anchor.bracket_law");
  auto residual = [&](const Section& x, const Section& y, const Scalar& f) {
    return s.anchor_apply(s.bracket(x, y), ring.phi(f)) -
           s.anchor_apply(s.phi(x), s.anchor_apply(y, f)) +
           s.anchor_apply(s.phi(y), s.anchor_apply(x, f));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& f : fs) {
        law.record(residual(b.basis(i), b.basis(j), f),
                   [&] { return with_function(basis_tuple({i, j}), ring, f); }, ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    const Scalar f = sampler.element(ring);
    law.record(residual(x, y, f), [&] { return sample(k); }, ring);
  }
  report.add(law.finish());
  return report;
}

VerificationReport check_subalgebroid(const HomAlgebroid& s, std::span<const Section> basis,
                                      const CheckOptions&) {
  std::vector<Section> frame(basis.begin(), basis.end());
  const Matrix m = Matrix::from_columns(frame, s.rank());
  if (m.rank() != frame.size()) {
    throw PreconditionError("the given sections are not of constant rank over the fraction field");
  }
  auto in_span = [&](const Section& x) { return m.solve_any(x).has_value(); };
  VerificationReport report;
  Law twist("twist_closed");
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Section image = s.phi(frame[i]);
    if (!in_span(image)) {
      twist.fail("phi(b" + std::to_string(i + 1) + ")", "not in span: " + s.bundle().format(image));
    } else {
      twist.record(Scalar(0), [] { return std::string(); }, s.coefficients());
    }
  }
  report.add(twist.finish());
  Law closed("bracket_closed");
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i; j < frame.size(); ++j) {
      const Section br = s.bracket(frame[i], frame[j]);
      if (!in_span(br)) {
        closed.fail("[b" + std::to_string(i + 1) + ",b" + std::to_string(j + 1) + "]",
                    "not in span: " + s.bundle().format(br));
      } else {
        closed.record(Scalar(0), [] { return std::string(); }, s.coefficients());
      }
    }
  }
  report.add(closed.finish());
  return report;
}

VerificationReport check_metric(const HomAlgebroid& s, const Matrix& g, const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  if (g.rows() != n || g.cols() != n) throw DimensionError("metric must be rank x rank");
  Law sym("symmetric");
  sym.record(g - g.transpose(), [] { return std::string("G - G^T"); }, ring);
  report.add(sym.finish());
  Law nondeg("nondegenerate");
  const Scalar det = g.determinant();
  if (det.is_zero()) {
    nondeg.fail("det G", "metric is degenerate over the fraction field");
  } else {
    nondeg.record(Scalar(0), [] { return std::string(); }, ring);
    nondeg.set_detail("det G = " + ring.format(det));
  }
  report.add(nondeg.finish());
  Law inv("invariance");
  const Matrix& phi = s.bundle().twist();
  inv.record(phi.transpose() * g * phi - s.bundle().pull(g),
             [] { return std::string("Phi^T G Phi - phi*(G)"); }, ring);
  Sampler sampler(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, s.bundle());
    const Section y = random_section(sampler, s.bundle());
    inv.record(pairing(g, s.phi(x), s.phi(y)) - ring.phi(pairing(g, x, y)), [&] { return sample(k); },
               ring);
  }
  report.add(inv.finish());
  return report;
}

VerificationReport check_symplectic(const HomAlgebroid& s, const Matrix& omega,
                                    const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  const HomBundle& b = s.bundle();
  if (omega.rows() != n || omega.cols() != n) throw DimensionError("symplectic form must be rank x rank");
  Law anti("antisymmetric");
  anti.record(omega + omega.transpose(), [] { return std::string("omega + omega^T"); }, ring);
  report.add(anti.finish());
  Law nondeg("nondegenerate");
  const Scalar det = omega.determinant();
  if (det.is_zero()) {
    nondeg.fail("det omega", "form is degenerate over the fraction field");
  } else {
    nondeg.record(Scalar(0), [] { return std::string(); }, ring);
  }
  report.add(nondeg.finish());

  Sampler sampler(options.seed);
  Law inv("invariance");
  const Matrix& phi = b.twist();
  inv.record(phi.transpose() * omega * phi - b.pull(omega),
             [] { return std::string("Phi^T omega Phi - phi*(omega)"); }, ring);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    inv.record(pairing(omega, s.phi(x), s.phi(y)) - ring.phi(pairing(omega, x, y)),
               [&] { return sample(k); }, ring);
  }
  report.add(inv.finish());

  auto w = [&](const Section& x, const Section& y) { return pairing(omega, x, y); };
  auto six = [&](const Section& x, const Section& y, const Section& z) {
    return s.anchor_apply(s.phi(x), w(y, z)) - s.anchor_apply(s.phi(y), w(x, z)) +
           s.anchor_apply(s.phi(z), w(x, y)) - w(s.bracket(x, y), s.phi(z)) +
           w(s.bracket(x, z), s.phi(y)) - w(s.bracket(y, z), s.phi(x));
  };
  Law cocycle("cocycle");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        cocycle.record(six(b.basis(i), b.basis(j), b.basis(l)), [&] { return basis_tuple({i, j, l}); },
                       ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, b);
    const Section y = random_section(sampler, b);
    const Section z = random_section(sampler, b);
    cocycle.record(six(x, y, z), [&] { return sample(k); }, ring);
  }
  report.add(cocycle.finish());

  Law closed("closed");
  Form form(n, 2);
  const auto& tuples = form.tuples();
  for (std::size_t t = 0; t < tuples.size(); ++t) form[t] = omega(tuples[t][0], tuples[t][1]);
  const Form d = exterior_derivative(s, form);
  const auto& dt = d.tuples();
  for (std::size_t t = 0; t < dt.size(); ++t) {
    closed.record(d[t], [&] { return "d omega" + basis_tuple({dt[t][0], dt[t][1], dt[t][2]}); }, ring);
  }
  if (dt.empty()) closed.record(Scalar(0), [] { return std::string(); }, ring);
  report.add(closed.finish());
  return report;
}

VerificationReport check_hom_algebroid(const HomAlgebroid& s, const CheckOptions& options) {
  return check_hom_algebroid(s, [&s](const Section& x, const Section& y) { return s.bracket(x, y); },
                             options);
}

VerificationReport check_hom_algebroid(const HomAlgebroid& s, const ProductFn& product,
                                       const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const HomBundle& b = s.bundle();
  const std::size_t n = s.rank();
  Sampler sampler(options.seed);
  std::vector<Scalar> fs = probe_functions(ring, sampler, std::min<std::size_t>(options.samples, 3));

  Law right("leibniz_right");
  Law left("linear_left");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Section x = b.basis(i);
      const Section y = b.basis(j);
      const Section xy = product(x, y);
      for (const auto& f : fs) {
        right.record(product(x, scale(f, y)) - scale(ring.phi(f), xy) -
                         scale(s.anchor_apply(s.phi(x), f), s.phi(y)),
                     [&] { return with_function(basis_tuple({i, j}), ring, f); }, ring);
        left.record(product(scale(f, x), y) - scale(ring.phi(f), xy),
                    [&] { return with_function(basis_tuple({i, j}), ring, f); }, ring);
      }
    }
  }
  report.add(right.finish());
  report.add(left.finish());
  report.add(anchor_compatibility(s, options));
  return report;
}

VerificationReport check_left_symmetric(const HomAlgebroid& p, const Matrix& omega,
                                        const CheckOptions&) {
  VerificationReport report;
  const auto& ring = p.coefficients();
  const HomBundle& b = p.bundle();
  const std::size_t n = p.rank();
  Law form("form");
  form.record(omega + omega.transpose(), [] { return std::string("omega + omega^T"); }, ring);
  if (omega.determinant().is_zero()) form.fail("det omega", "form is degenerate over the fraction field");
  report.add(form.finish());

  auto w = [&](const Section& x, const Section& y) { return pairing(omega, x, y); };
  auto ass = [&](const Section& x, const Section& y, const Section& z) {
    return p.bracket(p.bracket(x, y), p.phi(z)) - p.bracket(p.phi(x), p.bracket(y, z));
  };
  Law law("associator");
  std::vector<Section> phi2(n);
  for (std::size_t i = 0; i < n; ++i) phi2[i] = b.phi_power(b.basis(i), 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Section x = b.basis(i);
      const Section y = b.basis(j);
      const Scalar wxy = w(x, y);
      for (std::size_t k = 0; k < n; ++k) {
        const Section z = b.basis(k);
        const Section diff = ass(x, y, z) - ass(y, x, z);
        for (std::size_t l = 0; l < n; ++l) {
          const Section zp = b.basis(l);
          const Scalar lhs = w(diff, phi2[l]);
          const Scalar rhs = p.anchor_apply(phi2[k], p.anchor_apply(p.phi(zp), wxy)) -
                             ring.phi(p.anchor_apply(p.bracket(z, zp), wxy));
          law.record(lhs - rhs, [&] { return basis_tuple({i, j, k, l}); }, ring);
        }
      }
    }
  }
  report.add(law.finish());
  return report;
}

VerificationReport dsquared_report(const HomAlgebroid& s, const CheckOptions& options) {
  VerificationReport report;
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  Sampler sampler(options.seed);
  Law functions("functions");
  functions.set_info();
  std::vector<Scalar> fs = probe_functions(ring, sampler, options.samples);
  for (const auto& f : fs) {
    const Form dd = exterior_derivative(s, exterior_derivative(s, function_form(n, f)));
    Section residual(dd.values().begin(), dd.values().end());
    functions.record(residual, [&] { return "f = " + ring.format(f); }, ring);
  }
  report.add(functions.finish());
  Law covectors("one_forms");
  covectors.set_info();
  for (std::size_t i = 0; i < n; ++i) {
    const Form dd = exterior_derivative(s, exterior_derivative(s, covector(s.bundle().basis(i))));
    Section residual(dd.values().begin(), dd.values().end());
    covectors.record(residual, [&] { return "e^" + std::to_string(i + 1); }, ring);
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Form dd =
        exterior_derivative(s, exterior_derivative(s, covector(random_section(sampler, s.bundle()))));
    Section residual(dd.values().begin(), dd.values().end());
    covectors.record(residual, [&] { return sample(k); }, ring);
  }
  report.add(covectors.finish());
  return report;
}

}  // namespace homlie
