#include <gtest/gtest.h>

#include <random>

#include "matweight/sums.hpp"

using namespace matweight;

namespace {

ParamPoly pp(long v) { return ParamPoly(Rational(v)); }

// Wallis oracle at k = 0: alpha_n = (1/2)_n / n!, computed by plain products.
Rational wallis(int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= Rational(2 * i + 1, 2 * (i + 1));
  return r;
}

}  // namespace

TEST(Recurrence, InitialValues) {
  const AlphaBetaSeq seq = alpha_beta_recurrence(3);
  ASSERT_EQ(seq.alpha.size(), 4u);
  ASSERT_EQ(seq.beta.size(), 4u);
  EXPECT_EQ(seq.alpha[0], pp(1));
  EXPECT_EQ(seq.beta[0], (pp(1) + k1().scaled(2) - k0().scaled(2)).scaled(Rational(-1, 2)));
  EXPECT_EQ(poly_eval(seq.alpha[1], Rational(0), Rational(0)), Rational(1, 2));
  EXPECT_THROW(alpha_beta_recurrence(-1), std::invalid_argument);
}

TEST(Recurrence, WallisValuesAtZeroParameters) {
  const AlphaBetaSeq seq = alpha_beta_recurrence(10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(poly_eval(seq.alpha[static_cast<std::size_t>(n)], Rational(0), Rational(0)), wallis(n));
    // at k = 0 beta_n is the next Wallis value with a minus sign
    EXPECT_EQ(poly_eval(seq.beta[static_cast<std::size_t>(n)], Rational(0), Rational(0)), -wallis(n + 1));
  }
}

TEST(ClosedForms, AgreeWithRecurrenceThroughEight) {
  const AlphaBetaSeq seq = alpha_beta_recurrence(8);
  for (int n = 0; n <= 8; ++n) {
    const auto un = static_cast<std::size_t>(n);
    EXPECT_EQ(alpha_closed(n), seq.alpha[un]) << "n=" << n;
    EXPECT_EQ(beta_closed(n), seq.beta[un]) << "n=" << n;
    EXPECT_EQ(s_inner_closed(n, Pairing::p12), seq.alpha[un] * p12_norm());
    EXPECT_EQ(s_inner_closed(n, Pairing::p14), seq.beta[un] * p12_norm());
  }
  EXPECT_EQ(alpha_closed(0), pp(1));
  EXPECT_THROW(alpha_closed(-1), std::invalid_argument);
  EXPECT_THROW(s_inner_closed(-1, Pairing::p12), std::invalid_argument);
}

TEST(SInner, SmallCases) {
  EXPECT_EQ(s_inner_closed(0, Pairing::p12), pp(1) + k0().scaled(2) + k1().scaled(2));
  const ParamPoly kp = k1() + k0(), km = k1() - k0();
  const ParamPoly half(Rational(1, 2));
  EXPECT_EQ(s_inner_closed(0, Pairing::p14), ((half + kp) * (half + km)).scaled(-2));
}

TEST(FValues, Examples) {
  const Rational k0v(3, 10), k1v(1, 10);
  EXPECT_EQ(f_values(0, k0v, k1v).first, Rational(1));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(f_values(n, Rational(1, 5), Rational(0)).first, Rational(1));
  for (int n = 0; n <= 6; ++n) {
    auto [f1, f2] = f_values(n, k0v, k1v);
    EXPECT_EQ(f_prefactor(n, Pairing::p12, k0v, k1v) * f1, poly_eval(s_inner_closed(n, Pairing::p12), k0v, k1v));
    EXPECT_EQ(f_prefactor(n, Pairing::p14, k0v, k1v) * f2, poly_eval(s_inner_closed(n, Pairing::p14), k0v, k1v));
  }
}

TEST(FValues, DegenerateParametersAreReported) {
  // -n - 1/2 - k1 - k0 + j = 0 at n = 1, j = 0 when k0 + k1 = -3/2
  EXPECT_THROW(f_values(1, Rational(-1), Rational(-1, 2)), degenerate_parameter);
}

TEST(ChuVandermonde, Examples) {
  auto [s0, r0] = chu_vandermonde(0, Rational(1, 3));
  EXPECT_EQ(s0, Rational(1));
  EXPECT_EQ(r0, Rational(1));
  auto [s1, r1] = chu_vandermonde(1, Rational(1, 4));
  EXPECT_EQ(s1, Rational(5, 6));
  EXPECT_EQ(r1, Rational(5, 6));
  auto [s20, r20] = chu_vandermonde(20, Rational(-1, 3));
  EXPECT_EQ(s20, r20);
  EXPECT_THROW(chu_vandermonde(-1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(chu_vandermonde(3, Rational(-1, 2)), degenerate_parameter);
}

TEST(ChuVandermonde, RandomRationals) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 20) {
    const Rational k1v(std::uniform_int_distribution<long>(-40, 40)(rng), std::uniform_int_distribution<long>(1, 17)(rng));
    for (int n = 0; n <= 50; ++n) {
      try {
        auto [s, r] = chu_vandermonde(n, k1v);
        ASSERT_EQ(s, r) << "n=" << n << " k1=" << k1v;
      } catch (const degenerate_parameter&) {
      }
    }
    ++checked;
  }
}

TEST(Squeeze, ZeroCIsEquality) {
  for (int n = 0; n <= 12; ++n) {
    SqueezeReport r = squeeze_check(n, Rational(3, 5), Rational(-1, 5), Rational(0));
    EXPECT_EQ(r.s_sum, Rational(1));
    EXPECT_EQ(r.middle, Rational(1));
    EXPECT_EQ(r.u_sum, Rational(1));
    EXPECT_TRUE(r.holds);
  }
}

TEST(Squeeze, BothBranches) {
  // (k0, k1) = (0.3, 0.1): c = -k1 < 0
  SqueezeReport neg = squeeze_check(10, Rational(9, 10), Rational(-7, 10), Rational(-1, 10));
  EXPECT_TRUE(neg.ordering_c_nonpos);
  EXPECT_TRUE(neg.holds);
  // (k0, k1) = (0.1, -0.2): c = 0.2 > 0
  SqueezeReport pos = squeeze_check(10, Rational(2, 5), Rational(-4, 5), Rational(1, 5));
  EXPECT_TRUE(pos.ordering_c_nonneg);
  EXPECT_TRUE(pos.holds);
}

TEST(Squeeze, RegionIsEnforced) {
  EXPECT_THROW(squeeze_check(3, Rational(1), Rational(-1, 2), Rational(0)), std::domain_error);
  EXPECT_THROW(squeeze_check(3, Rational(1, 2), Rational(0), Rational(0)), std::domain_error);
  EXPECT_THROW(squeeze_check(3, Rational(1, 2), Rational(-1, 2), Rational(-1)), std::domain_error);
}
