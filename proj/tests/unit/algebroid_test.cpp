#include <gtest/gtest.h>

#include "homlie/algebroid/subbundle.hpp"
#include "homlie/algebroid/verify.hpp"
#include "homlie/connection/connection.hpp"
#include "homlie/errors.hpp"
#include "homlie/io/fixtures.hpp"
#include "naive.hpp"
#include "support.hpp"

namespace {

using namespace homlie;
using namespace testing_support;

HomAlgebroid heisenberg(const Matrix& phi) { return lie_over_q(phi, {{1, 2, 3, q(1)}}); }

/// Rank 1 over Q[x], zero bracket, anchor coefficient 1.
HomAlgebroid line(long scale, const Scalar& twist, DerivationTwist kind = DerivationTwist::Pullback) {
  RingPtr ring = scaled_line(scale);
  Matrix phi(1, 1);
  phi(0, 0) = twist;
  std::vector<TwistedDerivation> anchors{TwistedDerivation(ring, {Scalar(1)}, kind)};
  return HomAlgebroid(HomBundle(ring, phi), StructureKind::Lie, make_table(1), anchors);
}

TEST(HomBundle, TwistIsSemilinear) {
  const HomAlgebroid s = line(2, q(1, 2));
  const Section x = sec({px("x^2")});
  EXPECT_EQ(s.phi(x), sec({px("2*x^2")}));
  EXPECT_EQ(s.phi_inverse(s.phi(x)), x);
  EXPECT_EQ(s.bundle().phi(scale(px("x"), x)), scale(px("2*x"), s.phi(x)));
}

TEST(HomBundle, ComputesInverseWhenOmitted) {
  const HomBundle b(CoefficientRing::rationals(), mat({{q(2), q(1)}, {q(0), q(1)}}));
  EXPECT_EQ(b.twist() * b.inverse_twist(), Matrix::identity(2));
}

TEST(HomBundle, RejectsWrongDeclaredInverse) {
  EXPECT_THROW(HomBundle(CoefficientRing::rationals(), diag({q(2), q(1)}), diag({q(2), q(1)})),
               InvalidStructureError);
}

TEST(HomBundle, RejectsInverseOutsideTheRing) {
  // Phi = (x) has no inverse in Q[x].
  Matrix phi(1, 1);
  phi(0, 0) = px("x");
  EXPECT_THROW(HomBundle(scaled_line(2), phi), DomainError);
}

TEST(HomAlgebroid, RejectsNonSkewTable) {
  StructureTable t = make_table(2);
  t[0][1][1] = q(1);
  EXPECT_THROW(HomAlgebroid(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)), StructureKind::Lie, t, {}),
               InvalidStructureError);
}

TEST(Bracket, AbelianIsZero) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)));
  EXPECT_TRUE(is_zero(s.bracket(sec({q(3), q(-1)}), sec({q(1, 2), q(5)}))));
}

TEST(Bracket, BasisInputsReadTheTable) {
  const HomAlgebroid s = heisenberg(Matrix::identity(3));
  EXPECT_EQ(s.bracket(s.bundle().basis(0), s.bundle().basis(1)), sec({q(0), q(0), q(1)}));
  EXPECT_EQ(s.bracket(s.bundle().basis(1), s.bundle().basis(0)), sec({q(0), q(0), q(-1)}));
}

TEST(Bracket, ShiftedLineFollowsLeibnizRule) {
  // sigma: x -> x + 1, a(e1) = sigma o d/dx, Phi = (1): [e1, x e1] = a(phi e1)(x) phi(e1) = e1.
  std::vector<std::string> vars{"x"};
  const Polynomial x = Polynomial::variable(0, 1);
  RingPtr ring = std::make_shared<const CoefficientRing>(
      RingKind::Polynomial, vars, RingEndomorphism({x + Polynomial(Rational(1), 1)}, {x - Polynomial(Rational(1), 1)}));
  const HomAlgebroid s(HomBundle(ring, Matrix::identity(1)), StructureKind::Lie, make_table(1),
                       {TwistedDerivation(ring, {Scalar(1)})});
  const Section e1 = s.bundle().basis(0);
  const Section xe1 = sec({px("x")});
  EXPECT_EQ(s.bracket(e1, xe1), e1);
  EXPECT_EQ(s.bracket(e1, xe1), oracle::bracket(s, e1, xe1));
}

TEST(Bracket, AgreesWithExpandedFormula) {
  Sampler sampler(7);
  for (int t = 0; t < 25; ++t) {
    const HomAlgebroid s = random_structure(sampler, 3);
    const Section x = random_poly_section(sampler, s);
    const Section y = random_poly_section(sampler, s);
    const Scalar f(sampler.polynomial(1, 2));
    const Scalar g(sampler.polynomial(1, 2));
    EXPECT_EQ(s.bracket(x, y), oracle::bracket(s, x, y));
    EXPECT_EQ(s.bracket(scale(f, x), scale(g, y)), oracle::bracket(s, scale(f, x), scale(g, y)));
    EXPECT_EQ(s.bracket(x, y), scale(Scalar(-1), s.bracket(y, x))) << "skew extension";
  }
}

TEST(HomLieAlgebra, AbelianWithIdentityTwistPasses) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(3)));
  EXPECT_TRUE(check_hom_lie_algebra(s).passed());
}

TEST(HomLieAlgebra, AffineFamilyPassesForEveryLambda) {
  for (long lambda : {1L, 2L, -3L, 5L}) {
    const VerificationReport r = check_hom_lie_algebra(affine(lambda));
    EXPECT_TRUE(r.passed()) << "lambda = " << lambda;
    EXPECT_TRUE(r.passed("jacobi"));
  }
  EXPECT_TRUE(check_hom_lie_algebra(affine(1, 3)).passed());
}

TEST(HomLieAlgebra, HeisenbergPassesAndBrokenVariantFails) {
  EXPECT_TRUE(check_hom_lie_algebra(heisenberg(Matrix::identity(3))).passed());
  const HomAlgebroid broken = lie_over_q(diag({q(2), q(1), q(1)}), {{1, 2, 3, q(1)}, {2, 3, 1, q(1)}});
  const VerificationReport r = check_hom_lie_algebra(broken);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(failures(r).empty());
  const CheckResult* first = r.find(failures(r).front());
  ASSERT_NE(first, nullptr);
  EXPECT_FALSE(first->witness.empty());
  EXPECT_FALSE(first->residual.empty());
}

TEST(HomLieAlgebra, RejectsProductKind) {
  const HomAlgebroid s =
      HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(2)), StructureKind::Product);
  EXPECT_TRUE(failed(check_hom_lie_algebra(s), "lie_type"));
}

TEST(HomLieAlgebroid, ScalarRingReducesToHomLieAlgebra) {
  const HomAlgebroid s = affine(2);
  EXPECT_EQ(check_hom_lie_algebroid(s).passed(), check_hom_lie_algebra(s).passed());
}

TEST(HomLieAlgebroid, ScaledLineWithMatchingTwistPasses) {
  for (long scale : {2L, 3L, -2L}) {
    const VerificationReport r = check_hom_lie_algebroid(line(scale, q(1, scale)));
    EXPECT_TRUE(r.passed()) << "scale " << scale;
    EXPECT_TRUE(r.passed("leibniz_rule"));
    EXPECT_TRUE(r.passed("anchor.compatibility"));
  }
}

TEST(HomLieAlgebroid, ScaledLineWithIdentityTwistBreaksCompatibility) {
  const VerificationReport r = check_hom_lie_algebroid(line(2, q(1)));
  ASSERT_TRUE(failed(r, "anchor.compatibility"));
  EXPECT_EQ(r.find("anchor.compatibility")->witness, "(e1), f = x");
  EXPECT_EQ(r.find("anchor.compatibility")->residual, "-1");
}

TEST(HomLieAlgebroid, UntwistedAnchorFailsCompatibilityOnX) {
  const VerificationReport r = check_hom_lie_algebroid(line(2, q(1), DerivationTwist::Identity));
  ASSERT_TRUE(failed(r, "anchor.compatibility"));
  EXPECT_EQ(r.find("anchor.compatibility")->witness, "(e1), f = x");
  EXPECT_TRUE(failed(r, "anchor.twisted_leibniz"));
}

TEST(HomLieAlgebroid, UntwistedAnchorFailsTwistedLeibnizEvenWithMatchedTwist) {
  const VerificationReport r = check_hom_lie_algebroid(line(2, q(1, 2), DerivationTwist::Identity));
  EXPECT_TRUE(failed(r, "anchor.twisted_leibniz"));
  EXPECT_TRUE(r.passed("anchor.compatibility"));
}

TEST(Subalgebroid, FullFramePasses) {
  const HomAlgebroid s = affine(3);
  const std::vector<Section> b{s.bundle().basis(0), s.bundle().basis(1)};
  EXPECT_TRUE(check_subalgebroid(s, b).passed());
}

TEST(Subalgebroid, AffineLinesAreClosed) {
  const HomAlgebroid s = affine(3);
  EXPECT_TRUE(check_subalgebroid(s, std::vector<Section>{s.bundle().basis(1)}).passed());
  EXPECT_TRUE(check_subalgebroid(s, std::vector<Section>{s.bundle().basis(0)}).passed());
}

TEST(Subalgebroid, HeisenbergPlaneIsNotClosed) {
  const HomAlgebroid s = heisenberg(Matrix::identity(3));
  const VerificationReport r = check_subalgebroid(s, std::vector<Section>{s.bundle().basis(0), s.bundle().basis(1)});
  ASSERT_TRUE(failed(r, "bracket_closed"));
  EXPECT_TRUE(r.passed("twist_closed"));
  EXPECT_NE(r.find("bracket_closed")->witness.find("1"), std::string::npos);
}

TEST(Subalgebroid, DependentSectionsAreRejected) {
  const HomAlgebroid s = affine(1);
  const std::vector<Section> b{sec({q(1), q(1)}), sec({q(2), q(2)})};
  EXPECT_THROW(check_subalgebroid(s, b), PreconditionError);
}

TEST(Subalgebroid, RestrictionReexpressesTable) {
  const HomAlgebroid s = lie_over_q(diag({q(1), q(2), q(5)}), {{1, 2, 2, q(1)}});
  const SubFrame frame(3, {s.bundle().basis(0), sec({q(0), q(3), q(0)})});
  const HomAlgebroid r = restrict_structure(s, frame);
  EXPECT_EQ(r.rank(), 2u);
  EXPECT_EQ(r.entry(0, 1), sec({q(0), q(1)}));
  EXPECT_EQ(r.bundle().twist(), diag({q(1), q(2)}));
  EXPECT_THROW(restrict_structure(s, SubFrame(3, {sec({q(1), q(0), q(1)})})), PreconditionError);
}

TEST(Metric, IdentityTwistAcceptsAnySymmetricForm) {
  const HomAlgebroid s = affine(1);
  EXPECT_TRUE(check_metric(s, mat({{q(3), q(1)}, {q(1), q(-2)}})).passed());
}

TEST(Metric, AntidiagonalNeedsLambdaOne) {
  const Matrix g = mat({{q(0), q(1)}, {q(1), q(0)}});
  EXPECT_TRUE(check_metric(affine(1), g).passed());
  const VerificationReport r = check_metric(affine(2), g);
  ASSERT_TRUE(failed(r, "invariance"));
  EXPECT_EQ(r.find("invariance")->residual, "[[0, 1], [1, 0]]");
  EXPECT_EQ(r.find("invariance")->witness, "Phi^T G Phi - phi*(G)");
}

TEST(Metric, SignTwistPreservesSplitForm) {
  const HomAlgebroid s = lie_over_q(diag({q(1), q(-1)}), {});
  EXPECT_TRUE(check_metric(s, diag({q(1), q(-1)})).passed());
}

TEST(Metric, DegenerateAndAsymmetricFormsFailSeparately) {
  const HomAlgebroid s = affine(1);
  EXPECT_TRUE(failed(check_metric(s, mat({{q(1), q(1)}, {q(1), q(1)}})), "nondegenerate"));
  EXPECT_TRUE(failed(check_metric(s, mat({{q(1), q(2)}, {q(0), q(1)}})), "symmetric"));
}

TEST(Symplectic, AbelianConstantFormPasses) {
  const HomAlgebroid s = HomAlgebroid::abelian(HomBundle(CoefficientRing::rationals(), Matrix::identity(4)));
  const Matrix w = mat({{q(0), q(2), q(1), q(0)},
                        {q(-2), q(0), q(0), q(3)},
                        {q(-1), q(0), q(0), q(1)},
                        {q(0), q(-3), q(-1), q(0)}});
  EXPECT_TRUE(check_symplectic(s, w).passed());
}

TEST(Symplectic, AffineInvarianceForcesLambdaOne) {
  const Matrix w = mat({{q(0), q(1)}, {q(-1), q(0)}});
  const VerificationReport ok = check_symplectic(affine(1), w);
  EXPECT_TRUE(ok.passed());
  EXPECT_TRUE(ok.passed("cocycle"));
  const VerificationReport bad = check_symplectic(affine(2), w);
  EXPECT_TRUE(failed(bad, "invariance"));
}

TEST(Symplectic, CocycleFailureIsDetected) {
  // [e1,e2] = e3 in rank 4 with omega pairing e3 against e4: the six-term sum picks up the bracket.
  const HomAlgebroid s = lie_over_q(Matrix::identity(4), {{1, 2, 3, q(1)}});
  const Matrix w = mat({{q(0), q(1), q(0), q(0)},
                        {q(-1), q(0), q(0), q(0)},
                        {q(0), q(0), q(0), q(1)},
                        {q(0), q(0), q(-1), q(0)}});
  const VerificationReport r = check_symplectic(s, w);
  EXPECT_TRUE(r.passed("invariance"));
  EXPECT_TRUE(failed(r, "cocycle"));
  EXPECT_TRUE(failed(r, "closed"));
}

TEST(Symplectic, DegenerateFormFails) {
  EXPECT_TRUE(failed(check_symplectic(affine(1), Matrix(2, 2)), "nondegenerate"));
}

HomAlgebroid product_structure(const RingPtr& ring, const Matrix& phi, std::initializer_list<Entry> entries,
                               std::vector<TwistedDerivation> anchors = {}) {
  return HomAlgebroid(HomBundle(ring, phi), StructureKind::Product, table_of(phi.rows(), entries, false),
                      std::move(anchors));
}

TEST(HomAlgebroid, ZeroProductPasses) {
  const HomAlgebroid s = product_structure(CoefficientRing::rationals(), Matrix::identity(2), {});
  EXPECT_TRUE(check_hom_algebroid(s).passed());
}

TEST(HomAlgebroid, LeftSymmetricConnectionProductPasses) {
  const HomAlgebroid s = affine(1);
  const Connection c = left_symmetric_connection(s, mat({{q(0), q(1)}, {q(-1), q(0)}}));
  EXPECT_TRUE(check_hom_algebroid(c.product()).passed());
}

TEST(HomAlgebroid, UntwistedLeftLinearityIsCaught) {
  RingPtr ring = scaled_line(2);
  const HomAlgebroid s = product_structure(ring, Matrix::identity(2), {{1, 1, 2, q(1)}},
                                           {TwistedDerivation(ring, {Scalar(1)}), TwistedDerivation::zero(ring)});
  // (fX).Y := f (X.Y) on coordinates, without the pullback.
  const ProductFn broken = [&](const Section& x, const Section& y) {
    Section out(2);
    for (std::size_t i = 0; i < 2; ++i) {
      const Section ey = s.bracket(s.bundle().basis(i), y);
      for (std::size_t k = 0; k < 2; ++k) out[k] += x[i] * ey[k];
    }
    return out;
  };
  const VerificationReport r = check_hom_algebroid(s, broken);
  ASSERT_TRUE(failed(r, "linear_left"));
  EXPECT_TRUE(check_hom_algebroid(s).passed("linear_left"));
}

TEST(LeftSymmetric, ZeroProductPasses) {
  const HomAlgebroid s = product_structure(CoefficientRing::rationals(), Matrix::identity(2), {});
  EXPECT_TRUE(check_left_symmetric(s, mat({{q(0), q(1)}, {q(-1), q(0)}})).passed());
}

TEST(LeftSymmetric, OnePointBaseReducesToAssociatorIdentity) {
  // e1.e1 = e1, e1.e2 = e2 with phi = diag(1,2) is a hom-left-symmetric algebra.
  const HomAlgebroid good =
      product_structure(CoefficientRing::rationals(), diag({q(1), q(2)}), {{1, 1, 1, q(1)}, {1, 2, 2, q(1)}});
  const Matrix w = mat({{q(0), q(1)}, {q(-1), q(0)}});
  EXPECT_TRUE(check_left_symmetric(good, w).passed());
  const HomAlgebroid bad = product_structure(CoefficientRing::rationals(), Matrix::identity(2), {{1, 2, 1, q(1)}});
  EXPECT_TRUE(failed(check_left_symmetric(bad, w), "associator"));
}

TEST(DSquared, IsReportedAsInformation) {
  const VerificationReport r = dsquared_report(load_fixture("double_zero_poisson").structure);
  ASSERT_FALSE(r.results().empty());
  for (const auto& x : r.results()) EXPECT_EQ(x.status, CheckStatus::Info);
  EXPECT_TRUE(r.passed());
}

}  // namespace
