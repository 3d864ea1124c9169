#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "homlie/algebroid/report.hpp"
#include "homlie/algebroid/structure.hpp"
#include "homlie/ring/expression.hpp"
#include "homlie/ring/sampling.hpp"

namespace testing_support {

using namespace homlie;

inline Scalar q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<Scalar> entries) {
  std::vector<Scalar> v(entries);
  return Matrix::diagonal(v);
}

inline Section sec(std::initializer_list<Scalar> entries) { return Section(entries); }

struct Entry {
  std::size_t i, j, k;  // 1-based
  Scalar c;
};

/// Table with [e_i, e_j] entries (skew filled in when `skew`).
inline StructureTable table_of(std::size_t n, std::initializer_list<Entry> entries, bool skew = true) {
  StructureTable t = make_table(n);
  for (const auto& e : entries) {
    t[e.i - 1][e.j - 1][e.k - 1] += e.c;
    if (skew) t[e.j - 1][e.i - 1][e.k - 1] -= e.c;
  }
  return t;
}

/// A Lie-type structure over Q with zero anchor.
inline HomAlgebroid lie_over_q(const Matrix& phi, std::initializer_list<Entry> entries) {
  const std::size_t n = phi.rows();
  return HomAlgebroid(HomBundle(CoefficientRing::rationals(), phi), StructureKind::Lie, table_of(n, entries), {});
}

/// [e1,e2] = e2 with phi = diag(1, lambda).
inline HomAlgebroid affine(long lambda_num, long lambda_den = 1) {
  return lie_over_q(diag({q(1), q(lambda_num, lambda_den)}), {{1, 2, 2, q(1)}});
}

/// Q[x] with x -> c x.
inline RingPtr scaled_line(long c) {
  std::vector<std::string> vars{"x"};
  const Polynomial x = Polynomial::variable(0, 1);
  Rational inv(1, c);
  inv.canonicalize();
  RingEndomorphism pullback({x * Rational(c)}, {x * inv});
  return std::make_shared<const CoefficientRing>(RingKind::Polynomial, vars, pullback);
}

inline Scalar px(const std::string& text) {
  const std::vector<std::string> vars{"x"};
  return parse_expression(text, vars);
}

/// A random skew structure (not necessarily satisfying any axiom) over Q[x]
/// with x -> 2x, constant diagonal twist and random polynomial anchors.
inline HomAlgebroid random_structure(Sampler& sampler, std::size_t n, bool anchored = true) {
  RingPtr ring = scaled_line(2);
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(Scalar(sampler.nonzero_rational()));
  HomBundle bundle(ring, Matrix::diagonal(d));
  StructureTable t = make_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (sampler.integer(0, 2) == 0) continue;
        const Scalar c = sampler.element(*ring, 1);
        t[i][j][k] = c;
        t[j][i][k] = -c;
      }
    }
  }
  std::vector<TwistedDerivation> anchors;
  for (std::size_t i = 0; i < n; ++i) {
    anchors.emplace_back(ring, std::vector<Scalar>{anchored ? sampler.element(*ring, 1) : Scalar(0)});
  }
  return HomAlgebroid(bundle, StructureKind::Lie, t, anchors);
}

inline Section random_poly_section(Sampler& sampler, const HomAlgebroid& s) {
  Section x(s.rank());
  for (auto& c : x) c = sampler.element(s.coefficients(), 2);
  return x;
}

inline std::vector<std::string> failures(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& x : r.results()) {
    if (x.status == CheckStatus::Fail) out.push_back(x.name);
  }
  return out;
}

inline bool failed(const VerificationReport& r, const std::string& name) {
  const CheckResult* x = r.find(name);
  return x != nullptr && x->status == CheckStatus::Fail;
}

}  // namespace testing_support
