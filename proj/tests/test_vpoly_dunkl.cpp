#include <gtest/gtest.h>

#include <random>

#include "matweight/dunkl.hpp"
#include "random_poly.hpp"

using namespace matweight;
using testing_util::random_vpoly;
using testing_util::random_xpoly;

namespace {

VPoly t1(XPoly f) { return VPoly::along(0, std::move(f)); }
VPoly t2(XPoly f) { return VPoly::along(1, std::move(f)); }

ParamPoly pp(long v) { return ParamPoly(Rational(v)); }

}  // namespace

TEST(GroupElement, EightElementsClosedUnderComposition) {
  const auto all = GroupElement::all();
  ASSERT_EQ(all.size(), 8u);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const GroupElement ab = a * b;
      EXPECT_NE(std::find(all.begin(), all.end(), ab), all.end());
    }
    EXPECT_EQ(a * a.inverse(), GroupElement::identity());
  }
  for (const auto& s : {GroupElement::sigma1(), GroupElement::sigma2(), GroupElement::sigma12_plus(),
                        GroupElement::sigma12_minus()})
    EXPECT_EQ(s * s, GroupElement::identity());
}

TEST(GroupAct, Examples) {
  std::mt19937_64 rng(1);
  const VPoly f = random_vpoly(rng, 3);
  EXPECT_EQ(group_act(GroupElement::identity(), f), f);
  EXPECT_EQ(group_act(GroupElement::sigma1(), p12()), -p12());
  EXPECT_EQ(group_act(GroupElement::sigma12_plus(), p12()), -p12());
  EXPECT_EQ(group_act(GroupElement::sigma12_plus(), t1(phi())), -t2(phi()));
}

TEST(GroupAct, IsAnActionOnVectorPolynomials) {
  std::mt19937_64 rng(2);
  const VPoly f = random_vpoly(rng, 4);
  for (const auto& a : GroupElement::all())
    for (const auto& b : GroupElement::all())
      EXPECT_EQ(group_act(a, group_act(b, f)), group_act(a * b, f));
}

TEST(Dunkl, Examples) {
  // the two diagonal-root terms cancel; the e1 term gives -2k1 t1
  EXPECT_EQ(dunkl_d(1, t1(x1())), t1(XPoly(1).scaled(pp(1) - k1().scaled(2))));
  // D1(x1^2 t1) = 2 x1 t1 + 2 k0 x2 t2
  EXPECT_EQ(dunkl_d(1, t1(x1() * x1())), t1(x1().scaled(pp(2))) + t2(x2().scaled(k0().scaled(2))));
  EXPECT_TRUE(dunkl_d(2, t1(XPoly(1))).is_zero());
  EXPECT_THROW(dunkl_d(3, p12()), std::invalid_argument);
}

TEST(Dunkl, OperatorsCommute) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const VPoly f = random_vpoly(rng, 4);
    EXPECT_EQ(dunkl_d(1, dunkl_d(2, f)), dunkl_d(2, dunkl_d(1, f)));
  }
}

TEST(Dunkl, DivideByRootRejectsRemainders) {
  EXPECT_THROW(divide_by_root(x1() + XPoly(1), Root::e1), division_not_exact);
  EXPECT_EQ(divide_by_root(x1() * x1() - x2() * x2(), Root::e1_minus_e2), x1() + x2());
}

TEST(Laplacian, Examples) {
  EXPECT_TRUE(laplacian(p12()).is_zero());
  const ParamPoly minus = pp(1) + k1().scaled(2) - k0().scaled(2);
  const ParamPoly plus = p12_norm();
  EXPECT_EQ(laplacian(phi() * p14()), p12().scaled(minus.scaled(Rational(-4))));
  // Delta(phi^2 p12) = -8(1+2k1+2k0) phi p14 + 8(1-2k0) |x|^2 p12
  const VPoly expected =
      (phi() * p14()).scaled(plus.scaled(Rational(-8))) + (norm_sq() * p12()).scaled((pp(1) - k0().scaled(2)).scaled(8));
  EXPECT_EQ(laplacian(phi() * phi() * p12()), expected);
}

TEST(Laplacian, LowersDegreeByTwo) {
  std::mt19937_64 rng(4);
  for (int d = 2; d <= 6; ++d) {
    const VPoly f = random_vpoly(rng, d, true);
    const VPoly g = laplacian(f);
    if (!g.is_zero()) {
      EXPECT_EQ(g.homogeneous_degree(), d - 2);
    }
  }
  EXPECT_THROW((t1(x1()) + t1(x1() * x1())).homogeneous_degree(), std::domain_error);
}

TEST(Laplacian, CommutesWithTheGroup) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3; ++i) {
    const VPoly f = random_vpoly(rng, 6);
    const VPoly lf = laplacian(f);
    for (const auto& w : GroupElement::all()) EXPECT_EQ(laplacian(group_act(w, f)), group_act(w, lf));
  }
}

TEST(ProductRule, HoldsForInvariantFactors) {
  std::mt19937_64 rng(6);
  const XPoly sq = norm_sq(), ph = phi();
  const XPoly fs[] = {sq, ph * ph, pow(ph, 4), sq * sq};
  std::vector<VPoly> gs{p12(), ph * p14()};
  for (int i = 0; i < 3; ++i) gs.push_back(random_vpoly(rng, 3));
  for (const XPoly& f : fs)
    for (const VPoly& g : gs) EXPECT_TRUE(product_rule_residual(f, g).is_zero());
}

TEST(ProductRule, RejectsNonInvariantFactor) {
  EXPECT_THROW(product_rule_residual(phi(), p12()), std::invalid_argument);
  EXPECT_THROW(product_rule_residual(x1(), p12()), std::invalid_argument);
}

TEST(Laplacian, NormSquaredRule) {
  // Delta(|x|^2 g) = 4(m+1) g + |x|^2 Delta g for homogeneous g of degree m
  std::mt19937_64 rng(8);
  for (int m = 0; m <= 6; ++m) {
    const VPoly g = random_vpoly(rng, m, true);
    const VPoly rhs = g.scaled(pp(4 * (m + 1))) + norm_sq() * laplacian(g);
    EXPECT_EQ(laplacian(norm_sq() * g), rhs) << "m=" << m;
  }
}

TEST(Laplacian, NormSquaredShift) {
  // Delta^{n+1}(|x|^2 f) = 4(n+1)(n+2) Delta^n f for f of degree 2n+1
  std::mt19937_64 rng(9);
  for (int n = 0; n <= 3; ++n) {
    const VPoly f = random_vpoly(rng, 2 * n + 1, true);
    EXPECT_EQ(laplacian_power(norm_sq() * f, n + 1), laplacian_power(f, n).scaled(pp(4 * (n + 1) * (n + 2))));
  }
  // the documented n = 1 example with h = phi p14
  const VPoly h = phi() * p14();
  EXPECT_EQ(laplacian_power(norm_sq() * h, 2), laplacian(h).scaled(pp(24)));
}

TEST(Laplacian, PhiPowerIdentities) {
  const XPoly ph = phi(), sq = norm_sq();
  const ParamPoly minus = pp(1) + k1().scaled(2) - k0().scaled(2);
  for (int n = 1; n <= 3; ++n) {
    const auto un = static_cast<unsigned>(n);
    const VPoly lhs1 = laplacian(pow(ph, 2 * un) * p12());
    const VPoly rhs1 = (pow(ph, 2 * un - 1) * p14()).scaled(p12_norm().scaled(Rational(-8 * n))) +
                       (sq * pow(ph, 2 * un - 2) * p12()).scaled((pp(2 * n - 1) - k0().scaled(2)).scaled(8 * n));
    EXPECT_EQ(lhs1, rhs1) << "n=" << n;
    const VPoly lhs2 = laplacian(pow(ph, 2 * un + 1) * p14());
    const VPoly rhs2 = (pow(ph, 2 * un) * p12()).scaled(minus.scaled(Rational(-4 * (2 * n + 1)))) +
                       (sq * pow(ph, 2 * un - 1) * p14()).scaled((pp(2 * n + 1) + k0().scaled(2)).scaled(8 * n));
    EXPECT_EQ(lhs2, rhs2) << "n=" << n;
  }
}

TEST(LaplacianPower, Examples) {
  EXPECT_TRUE(laplacian_power(p12(), 1).is_zero());
  EXPECT_EQ(laplacian_power(p12(), 0), p12());
  EXPECT_THROW(laplacian_power(p12(), -1), std::invalid_argument);
  // Delta^2(phi^2 p12) = 192 alpha_1 p12
  const AlphaBetaSeq seq = alpha_beta_recurrence(1);
  EXPECT_EQ(laplacian_power(phi() * phi() * p12(), 2), p12().scaled(seq.alpha[1].scaled(192)));
}

TEST(AlphaBetaViaLaplacian, SmallCases) {
  auto [a0, b0] = alpha_beta_via_laplacian(0);
  EXPECT_EQ(a0, pp(1));
  EXPECT_EQ(b0, (pp(1) + k1().scaled(2) - k0().scaled(2)).scaled(Rational(-4)));
  auto [a1, b1] = alpha_beta_via_laplacian(1);
  EXPECT_EQ(poly_eval(a1, Rational(0), Rational(0)), Rational(96));
  EXPECT_THROW(alpha_beta_via_laplacian(5), std::domain_error);
  EXPECT_THROW(alpha_beta_via_laplacian(-1), std::domain_error);
}

TEST(AlphaBetaViaLaplacian, MatchesScaledRecurrenceThroughFour) {
  const AlphaBetaSeq seq = alpha_beta_recurrence(kOperatorMaxN);
  for (int n = 0; n <= kOperatorMaxN; ++n) {
    auto [ap, bp] = alpha_beta_via_laplacian(n);
    const auto un = static_cast<std::size_t>(n);
    EXPECT_EQ(ap, seq.alpha[un].scaled(alpha_prime_scale(n))) << "n=" << n;
    EXPECT_EQ(bp, seq.beta[un].scaled(beta_prime_scale(n))) << "n=" << n;
  }
}

TEST(AlphaBetaViaLaplacian, ResultIsSupportedOnP12Monomials) {
  for (int n = 0; n <= 2; ++n) {
    const VPoly a = laplacian_power(pow(phi(), 2u * static_cast<unsigned>(n)) * p12(), 2 * n);
    ASSERT_EQ(a[0].size(), 1u);
    ASSERT_EQ(a[1].size(), 1u);
    EXPECT_EQ(a[0].coeff({0, 1}), -a[1].coeff({1, 0}));
  }
  EXPECT_THROW(p12_multiple(p14()), std::logic_error);
}

TEST(InnerProductS, Examples) {
  EXPECT_EQ(inner_product_S_exact(0, Pairing::p12), p12_norm());
  const ParamPoly minus = pp(1) + k1().scaled(2) - k0().scaled(2);
  EXPECT_EQ(inner_product_S_exact(0, Pairing::p14), (minus * p12_norm()).scaled(Rational(-1, 2)));
  EXPECT_EQ(poly_eval(inner_product_S_exact(1, Pairing::p12), Rational(0), Rational(0)), Rational(1, 2));
  for (int n = 0; n <= 3; ++n)
    for (Pairing k : {Pairing::p12, Pairing::p14})
      EXPECT_EQ(inner_product_S_exact(n, k, Backend::operator_calculus), inner_product_S_exact(n, k));
  EXPECT_THROW(inner_product_S_exact(5, Pairing::p12, Backend::operator_calculus), std::domain_error);
  EXPECT_NO_THROW(inner_product_S_exact(12, Pairing::p14));
}
