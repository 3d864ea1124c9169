#include <gtest/gtest.h>

#include "homlie/algebroid/calculus.hpp"
#include "homlie/algebroid/verify.hpp"
#include "homlie/errors.hpp"
#include "homlie/io/fixtures.hpp"
#include "naive.hpp"
#include "support.hpp"

namespace {

using namespace homlie;
using namespace testing_support;

HomAlgebroid qscale() { return load_fixture("poly_rank1_qscale").structure; }

Multivector basis_wedge(std::size_t n, std::initializer_list<std::size_t> indices) {
  std::vector<Section> factors;
  for (auto i : indices) {
    Section e(n);
    e[i - 1] = Scalar(1);
    factors.push_back(e);
  }
  return wedge_sections(n, factors);
}

Form random_form(Sampler& s, const HomAlgebroid& a, std::size_t degree) {
  Form w(a.rank(), degree);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = s.element(a.coefficients(), 2);
  return w;
}

bool is_zero(const AlternatingTable& t) { return t.is_zero(); }

TEST(AlternatingTable, SignsFollowPermutations) {
  Form w(3, 2);
  w.add(std::vector<std::size_t>{2, 0}, q(5));
  EXPECT_EQ(w.get(std::vector<std::size_t>{0, 2}), q(-5));
  EXPECT_EQ(w.get(std::vector<std::size_t>{2, 0}), q(5));
  EXPECT_EQ(w.get(std::vector<std::size_t>{1, 1}), q(0));
}

TEST(ExteriorDerivative, FunctionsOverRationalsAreClosed) {
  const HomAlgebroid s = affine(2);
  EXPECT_TRUE(is_zero(exterior_derivative(s, function_form(2, q(7)))));
}

TEST(ExteriorDerivative, AbelianKillsEveryForm) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), diag({q(2), q(3), q(1)})));
  Sampler sampler;
  for (std::size_t deg = 0; deg <= 2; ++deg) EXPECT_TRUE(is_zero(exterior_derivative(s, random_form(sampler, s, deg))));
}

TEST(ExteriorDerivative, AffineDualFormByHand) {
  // d(e^2)(e1,e2) = -phi^dagger(e^2)([phi^-1 e1, phi^-1 e2]) = -phi^dagger(e^2)(e2 / lambda) = -1/lambda^2.
  const HomAlgebroid s = affine(2);
  const Form e2 = covector(sec({q(0), q(1)}));
  const Form d = exterior_derivative(s, e2);
  EXPECT_EQ(d[0], q(-1, 4));
  const std::vector<Section> args{s.bundle().basis(0), s.bundle().basis(1)};
  EXPECT_EQ(exterior_derivative_at(s, e2, args), q(-1, 4));
}

TEST(ExteriorDerivative, FunctionDifferentialIsAnchorAction) {
  const HomAlgebroid s = qscale();
  Sampler sampler;
  for (int t = 0; t < 25; ++t) {
    const Scalar f(sampler.polynomial(1, 3));
    const Section z = random_poly_section(sampler, s);
    const std::vector<Section> args{z};
    EXPECT_EQ(exterior_derivative_at(s, function_form(1, f), args), s.anchor_apply(z, f));
  }
}

TEST(SchoutenBracket, DegreeOneIsTheBracket) {
  Sampler sampler(11);
  const HomAlgebroid s = random_structure(sampler, 3);
  for (int t = 0; t < 10; ++t) {
    const Section x = random_poly_section(sampler, s);
    const Section y = random_poly_section(sampler, s);
    const Multivector b = schouten_bracket(s, vector_field(x), vector_field(y));
    EXPECT_EQ(b.values(), vector_field(s.bracket(x, y)).values());
  }
}

TEST(SchoutenBracket, AbelianIsZero) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)));
  EXPECT_TRUE(is_zero(schouten_bracket(s, basis_wedge(2, {1}), basis_wedge(2, {1, 2}))));
}

TEST(SchoutenBracket, AffineTopDegreeByHand) {
  // (-1)^{3} ( [e1,e2] ^ phi(e2) - [e2,e2] ^ phi(e1) ) = -(e2 ^ 2 e2) = 0.
  const HomAlgebroid s = affine(2);
  EXPECT_TRUE(is_zero(schouten_bracket(s, basis_wedge(2, {1, 2}), basis_wedge(2, {2}))));
  // [e1, e1 ^ e2] = (-1)^2 (-1)^{1+2} [e1,e2] ^ phi(e1) = -(e2 ^ e1) = e1 ^ e2 in degree 2.
  const Multivector b = schouten_bracket(s, basis_wedge(2, {1}), basis_wedge(2, {1, 2}));
  EXPECT_EQ(b[0], q(1));
}

TEST(SchoutenBracket, OverflowDegreeIsZero) {
  const HomAlgebroid s = affine(2);
  const Multivector b = schouten_bracket(s, basis_wedge(2, {1, 2}), basis_wedge(2, {1, 2}));
  EXPECT_EQ(b.degree(), 3u);
  EXPECT_EQ(b.size(), 0u);
}

TEST(SchoutenBracket, RejectsDegreeZero) {
  const HomAlgebroid s = affine(2);
  EXPECT_THROW(schouten_bracket(s, Multivector(2, 0), basis_wedge(2, {1})), DimensionError);
}

TEST(SchoutenBracket, GradedAntisymmetryOnWedgeBasis) {
  for (const char* name : {"double_zero_poisson", "heisenberg_hom", "foliation_block"}) {
    const HomAlgebroid s = load_fixture(name).structure;
    const std::size_t n = s.rank();
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t qd = 1; p + qd - 1 <= n; ++qd) {
        for (const auto& I : AlternatingTable::tuples(n, p)) {
          for (const auto& J : AlternatingTable::tuples(n, qd)) {
            Multivector u(n, p), v(n, qd);
            u.add(I, Scalar(1));
            v.add(J, Scalar(1));
            const Multivector uv = schouten_bracket(s, u, v);
            const Multivector vu = schouten_bracket(s, v, u);
            // [u,v] = -(-1)^{(p-1)(q-1)} [v,u] when p+q is even; the leading
            // (-1)^{p+1} flips the relation when p+q is odd.
            const bool flip = (((p - 1) * (qd - 1)) + p + qd) % 2 == 1;
            EXPECT_EQ(uv.values(), (flip ? vu : Scalar(-1) * vu).values())
                << name << " p=" << p << " q=" << qd;
          }
        }
      }
    }
  }
}

TEST(SchoutenBracket, ReversedDegreesFlipSignOfAntisymmetry) {
  // [e1, e1^e2] and [e1^e2, e1] coincide under the leading sign.
  const HomAlgebroid s = affine(2);
  const Multivector u = basis_wedge(2, {1});
  const Multivector v = basis_wedge(2, {1, 2});
  const Multivector uv = schouten_bracket(s, u, v);
  EXPECT_EQ(uv.values(), schouten_bracket(s, v, u).values());
  EXPECT_NE(uv.size(), 0u);
}

TEST(SchoutenBracket, GradedLeibnizOnWedgeBasis) {
  for (const char* name : {"double_zero_poisson", "heisenberg_hom"}) {
    const HomAlgebroid s = load_fixture(name).structure;
    const std::size_t n = s.rank();
    for (std::size_t p = 1; p <= 2; ++p) {
      for (const auto& I : AlternatingTable::tuples(n, p)) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            Multivector u(n, p);
            u.add(I, Scalar(1));
            const Multivector v = basis_wedge(n, {a + 1});
            const Multivector z = basis_wedge(n, {b + 1});
            if (p + 1 > n) continue;
            const Multivector lhs = schouten_bracket(s, u, wedge(v, z));
            // [u, v^z] = [u,v] ^ phi(z) + (-1)^{(p-1) q} phi(v) ^ [u,z] with q = 1.
            const Multivector first = wedge(schouten_bracket(s, u, v), twist(s.bundle(), z));
            const Multivector second = wedge(twist(s.bundle(), v), schouten_bracket(s, u, z));
            const Multivector rhs = (p - 1) % 2 == 0 ? first + second : first - second;
            EXPECT_EQ(lhs.values(), rhs.values()) << name;
          }
        }
      }
    }
  }
}

TEST(LieDerivativeMultivector, AbelianIsZero) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)));
  EXPECT_TRUE(is_zero(lie_derivative_multivector(s, s.bundle().basis(0), basis_wedge(2, {2}))));
}

TEST(LieDerivativeMultivector, AffineMovesE2) {
  const HomAlgebroid s = affine(3);
  const Multivector l = lie_derivative_multivector(s, s.bundle().basis(0), basis_wedge(2, {2}));
  EXPECT_EQ(l.values(), basis_wedge(2, {2}).values());
}

TEST(LieDerivativeMultivector, GradedLeibnizOnRandomSections) {
  const HomAlgebroid s = load_fixture("double_zero_poisson").structure;
  Sampler sampler(3);
  for (int t = 0; t < 20; ++t) {
    const Section u = random_section(sampler, s.bundle());
    const Multivector v = vector_field(random_section(sampler, s.bundle()));
    const Multivector w = vector_field(random_section(sampler, s.bundle()));
    const Multivector lhs = lie_derivative_multivector(s, u, wedge(v, w));
    const Multivector rhs = wedge(lie_derivative_multivector(s, u, v), twist(s.bundle(), w)) +
                            wedge(twist(s.bundle(), v), lie_derivative_multivector(s, u, w));
    EXPECT_EQ(lhs.values(), rhs.values());
    EXPECT_EQ(lhs.values(), oracle::schouten(s, vector_field(u), wedge(v, w)).values());
  }
}

TEST(LieDerivativeForm, AbelianIsZero) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)));
  EXPECT_TRUE(is_zero(lie_derivative_form(s, sec({q(1), q(2)}), covector(sec({q(3), q(-1)})))));
}

TEST(LieDerivativeForm, FunctionOnScaledLine) {
  // L_{e1} x = a(phi e1)(x) = a(e1 / 2)(x) = 1/2.
  const HomAlgebroid s = qscale();
  const Form l = lie_derivative_form(s, s.bundle().basis(0), function_form(1, px("x")));
  EXPECT_EQ(l[0], q(1, 2));
}

TEST(LieDerivativeForm, AffineDualFormByHand) {
  // L_{e1} e^2 (e2) = -phi^dagger(e^2)([e1, e2 / lambda]) = -1/lambda^2.
  const HomAlgebroid s = affine(2);
  const Form l = lie_derivative_form(s, s.bundle().basis(0), covector(sec({q(0), q(1)})));
  EXPECT_EQ(l[1], q(-1, 4));
  EXPECT_EQ(l[0], q(0));
}

TEST(FormEvaluation, MatchesMultilinearExpansion) {
  Sampler sampler(5);
  const HomAlgebroid s = load_fixture("double_zero_poisson").structure;
  for (std::size_t deg = 1; deg <= 4; ++deg) {
    const Form w = random_form(sampler, s, deg);
    std::vector<Section> args;
    for (std::size_t i = 0; i < deg; ++i) args.push_back(random_section(sampler, s.bundle()));
    EXPECT_EQ(evaluate(w, args), oracle::evaluate(w, args));
  }
}

TEST(DualTwist, MatchesDefinition) {
  const HomAlgebroid s = load_fixture("heisenberg_hom").structure;
  Sampler sampler(9);
  const Form w = random_form(sampler, s, 2);
  const Form t = dual_twist(s.bundle(), w);
  for (int k = 0; k < 5; ++k) {
    const std::vector<Section> args{random_section(sampler, s.bundle()), random_section(sampler, s.bundle())};
    const std::vector<Section> pre{oracle::phi_inverse(s, args[0]), oracle::phi_inverse(s, args[1])};
    EXPECT_EQ(evaluate(t, args), oracle::evaluate(w, pre));
  }
}

TEST(Multivector, WedgeMatchesPermutationExpansion) {
  Sampler sampler(13);
  const HomAlgebroid s = load_fixture("double_zero_poisson").structure;
  for (std::size_t p = 1; p <= 4; ++p) {
    std::vector<Section> factors;
    for (std::size_t i = 0; i < p; ++i) factors.push_back(random_section(sampler, s.bundle()));
    EXPECT_EQ(wedge_sections(4, factors).values(), oracle::to_multivector(oracle::wedge(factors), 4, p).values());
  }
}

}  // namespace
