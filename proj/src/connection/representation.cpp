#include "homlie/connection/representation.hpp"

#include <string>

#include "homlie/algebroid/verify.hpp"
#include "homlie/errors.hpp"

namespace homlie {

Representation::Representation(HomAlgebroid algebroid, HomBundle target, Action action)
    : algebroid_(std::make_shared<const HomAlgebroid>(std::move(algebroid))),
      target_(std::move(target)),
      action_(std::move(action)) {
  if (!action_) throw PreconditionError("a representation needs an action");
}

Representation Representation::from_connection(const Connection& c) {
  auto conn = std::make_shared<const Connection>(c);
  return Representation(c.algebroid(), c.algebroid().bundle(),
                        [conn](const Section& x, const Section& v) { return (*conn)(x, v); });
}

Representation Representation::adjoint(const HomAlgebroid& s) {
  auto alg = std::make_shared<const HomAlgebroid>(s);
  return Representation(s, s.bundle(),
                        [alg](const Section& x, const Section& v) { return alg->bracket(x, v); });
}

Matrix Representation::operator_matrix(std::size_t i) const {
  const std::size_t m = target_.rank();
  std::vector<Vector> cols;
  cols.reserve(m);
  for (std::size_t b = 0; b < m; ++b) cols.push_back(action_(algebroid_->bundle().basis(i), target_.basis(b)));
  return Matrix::from_columns(cols, m);
}

VerificationReport check_representation(const Representation& r, const CheckOptions& options) {
  VerificationReport report;
  const HomAlgebroid& s = r.algebroid();
  const HomBundle& e = r.target();
  const auto& ring = s.coefficients();
  const std::size_t n = s.rank();
  const std::size_t m = e.rank();
  Sampler sampler(options.seed);
  auto sample = [](std::size_t k) { return "random sample " + std::to_string(k + 1); };
  auto pair = [](std::size_t i, std::size_t b) {
    return "(e" + std::to_string(i + 1) + ",v" + std::to_string(b + 1) + ")";
  };

  std::vector<Scalar> fs;
  for (std::size_t v = 0; v < ring.nvars(); ++v) fs.push_back(ring.variable(v));
  for (int k = 0; k < 2 && ring.nvars() > 0; ++k) fs.push_back(sampler.element(ring));
  if (fs.empty()) fs.push_back(Scalar(Rational(3, 2)));

  auto anchor_residual = [&](const Section& x, const Section& v, const Scalar& f) {
    return r(x, scale(f, v)) - scale(ring.phi(f), r(x, v)) - scale(s.anchor_apply(s.phi(x), f), e.phi(v));
  };
  auto twist_residual = [&](const Section& x, const Section& v) {
    return r(s.phi(x), e.phi(v)) - e.phi(r(x, v));
  };
  auto bracket_residual = [&](const Section& x, const Section& y, const Section& v) {
    return r(s.bracket(x, y), e.phi(v)) - r(s.phi(x), r(y, v)) + r(s.phi(y), r(x, v));
  };

  Law anchor("anchor");
  Law twist("twist");
  Law bracket("bracket");
  for (std::size_t i = 0; i < n; ++i) {
    const Section x = s.bundle().basis(i);
    for (std::size_t b = 0; b < m; ++b) {
      const Section v = e.basis(b);
      for (const auto& f : fs) {
        anchor.record(anchor_residual(x, v, f), [&] { return pair(i, b) + ", f = " + ring.format(f); }, ring);
      }
      twist.record(twist_residual(x, v), [&] { return pair(i, b); }, ring);
      for (std::size_t j = 0; j < n; ++j) {
        const Section y = s.bundle().basis(j);
        bracket.record(bracket_residual(x, y, v), [&] {
          return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",v" + std::to_string(b + 1) + ")";
        }, ring);
      }
    }
  }
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Section x = random_section(sampler, s.bundle());
    const Section y = random_section(sampler, s.bundle());
    const Section v = random_section(sampler, e);
    const Scalar f = sampler.element(ring);
    anchor.record(anchor_residual(x, v, f), [&] { return sample(k); }, ring);
    twist.record(twist_residual(x, v), [&] { return sample(k); }, ring);
    bracket.record(bracket_residual(x, y, v), [&] { return sample(k); }, ring);
  }
  report.add(anchor.finish());
  report.add(twist.finish());
  report.add(bracket.finish());
  return report;
}

Representation dual_representation(const Representation& r) {
  const HomBundle& e = r.target();
  const Matrix mu_t = e.twist().transpose();
  HomBundle dual(e.ring(), e.dual_twist(), e.pull_inverse(mu_t));
  auto original = std::make_shared<const Representation>(r);
  auto action = [original](const Section& x, const Section& xi) {
    const HomAlgebroid& s = original->algebroid();
    const HomBundle& t = original->target();
    const auto& ring = s.coefficients();
    const Section px = s.phi(x);
    const Section qx = s.phi_inverse(x);
    Section out(t.rank());
    for (std::size_t b = 0; b < t.rank(); ++b) {
      const Section once = t.phi_inverse(t.basis(b));
      const Section twice = t.phi_inverse(once);
      out[b] = s.anchor_apply(px, dot(xi, once)) - ring.phi(dot(xi, (*original)(qx, twice)));
    }
    return out;
  };
  return Representation(r.algebroid(), std::move(dual), std::move(action));
}

}  // namespace homlie
