#ifndef MATWEIGHT_WEIGHT_HPP
#define MATWEIGHT_WEIGHT_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "matweight/gamma.hpp"
#include "matweight/hypergeometric.hpp"

namespace matweight {

/// Parameters (k0, k1) with their region flags.
struct ParamPoint {
  double k0 = 0.0;
  double k1 = 0.0;
  bool integrable = true;          ///< |k0| < 1/2 and |k1| < 1/2
  bool positive_definite = true;   ///< -1/2 < k0 +- k1 < 1/2

  static ParamPoint make(double k0v, double k1v) {
    ParamPoint p;
    p.k0 = k0v;
    p.k1 = k1v;
    p.integrable = std::fabs(k0v) < 0.5 && std::fabs(k1v) < 0.5;
    p.positive_definite = std::fabs(k0v + k1v) < 0.5 && std::fabs(k0v - k1v) < 0.5;
    return p;
  }
};

/// Row-major 2x2 real matrix.
struct Mat2 {
  std::array<double, 4> a{};

  double operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 diag(double x, double y) { return {{x, 0.0, 0.0, y}}; }
  Mat2 transpose() const { return {{a[0], a[2], a[1], a[3]}}; }
  double det() const { return a[0] * a[3] - a[1] * a[2]; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }

  /// Smaller eigenvalue of the symmetric part.
  double min_eigenvalue() const {
    const double p = a[0], q = 0.5 * (a[1] + a[2]), r = a[3];
    const double mean = 0.5 * (p + r);
    const double rad = std::hypot(0.5 * (p - r), q);
    // the product form avoids cancellation when the eigenvalue is small
    const double big = mean >= 0.0 ? mean + rad : mean - rad;
    const double prod = p * r - q * q;
    if (big == 0.0) return 0.0;
    return mean >= 0.0 ? prod / big : big;
  }
};

/// cos(pi k0) cos(pi k1) / (2 pi).
inline double c_norm(const ParamPoint& p) {
  if (!p.integrable) throw std::domain_error("c_norm: requires |k0| < 1/2 and |k1| < 1/2");
  return std::cos(std::numbers::pi * p.k0) * std::cos(std::numbers::pi * p.k1) / (2.0 * std::numbers::pi);
}

/// (d1, d2). Needs the integrable region; throws at Gamma poles.
inline std::pair<double, double> d_consts(const ParamPoint& p) {
  const double c = c_norm(p);
  const double cos0 = std::cos(std::numbers::pi * p.k0);
  const double k0 = p.k0, k1 = p.k1;
  const double g1 = gamma_fn(0.5 - k1), g2 = gamma_fn(0.5 + k1);
  const double d1 = c * g1 * g1 / cos0 * rgamma(0.5 + k0 - k1) * rgamma(0.5 - k0 - k1);
  const double d2 = c * g2 * g2 / cos0 * rgamma(0.5 + k0 + k1) * rgamma(0.5 - k0 + k1);
  return {d1, d2};
}

inline constexpr double kWeightTol = 1e-12;

namespace detail {

/// L(u) with z = u^2 supplied together with 1 - u^2.
inline Mat2 eval_L_impl(double u, UnitArg z, const ParamPoint& p, double tol = kWeightTol) {
  const double k0 = p.k0, k1 = p.k1;
  const double pref = std::pow(z.complement, -k0);
  const double up = std::pow(u, k1), um = std::pow(u, -k1);
  Mat2 L;
  L(0, 0) = up * pref * gauss_2f1(-k0, 0.5 - k0 + k1, k1 + 0.5, z, tol).value;
  L(1, 1) = um * pref * gauss_2f1(-k0, 0.5 - k0 - k1, 0.5 - k1, z, tol).value;
  if (k0 != 0.0) {
    const double s12 = -k0 / (k1 + 0.5), s21 = -k0 / (0.5 - k1);
    L(0, 1) = s12 * up * u * pref *
              gauss_2f1(1.0 - k0, 0.5 - k0 + k1, k1 + 1.5, z, tol / std::fabs(s12)).value;
    L(1, 0) = s21 * um * u * pref *
              gauss_2f1(1.0 - k0, 0.5 - k0 - k1, 1.5 - k1, z, tol / std::fabs(s21)).value;
  }
  return L;
}

}  // namespace detail

/// L(u) for 0 < u < 1.
inline Mat2 eval_L(double u, const ParamPoint& p) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("eval_L: requires 0 < u < 1");
  if (!(std::fabs(p.k1) < 0.5 && std::fabs(p.k0) < 1.0))
    throw std::domain_error("eval_L: requires |k1| < 1/2");
  return detail::eval_L_impl(u, UnitArg{u * u, (1.0 - u) * (1.0 + u)}, p);
}

struct WeightEval {
  double u = 0.0;
  Mat2 L;
  Mat2 K;
  double d1 = 0.0;
  double d2 = 0.0;

  double detK() const { return K.det(); }
  double min_eigenvalue() const { return K.min_eigenvalue(); }
};

namespace detail {

inline WeightEval assemble(double u, const Mat2& L, const ParamPoint& p) {
  WeightEval w;
  w.u = u;
  w.L = L;
  std::tie(w.d1, w.d2) = d_consts(p);
  w.K = L.transpose() * Mat2::diag(w.d1, w.d2) * L;
  w.K(1, 0) = w.K(0, 1);
  return w;
}

/// K at x = (cos t, sin t) with the distance to pi/4 supplied separately
/// (delta = pi/4 - theta), so 1 - u^2 = sin(2 delta) / cos^2(theta) keeps
/// full relative accuracy near the diagonal.
inline WeightEval eval_K_impl(double theta, double delta, const ParamPoint& p) {
  const double u = std::tan(theta);
  const double c = std::cos(theta);
  const double w = std::sin(2.0 * delta) / (c * c);
  return assemble(u, eval_L_impl(u, UnitArg{u * u, w}, p), p);
}

}  // namespace detail

/// K(x_theta) for 0 < theta < pi/4, u = tan theta.
inline WeightEval eval_K(double theta, const ParamPoint& p) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 4.0))
    throw std::domain_error("eval_K: requires 0 < theta < pi/4");
  if (!p.integrable) throw std::domain_error("eval_K: requires |k0| < 1/2 and |k1| < 1/2");
  return detail::eval_K_impl(theta, std::numbers::pi / 4.0 - theta, p);
}

/// The four combinations x2 L11 - x1 L12, x1 L22 - x2 L21,
/// -x2 L11 - x1 L12, -x2 L21 - x1 L22 at x = (1, u) / sqrt(1 + u^2),
/// computed from L and from the h-function factorisation.
struct ComboForms {
  std::array<double, 4> from_L{};
  std::array<double, 4> factored{};
};

inline ComboForms combo_forms(double u, const ParamPoint& p) {
  const Mat2 L = eval_L(u, p);
  const double k0 = p.k0, k1 = p.k1;
  const double z = u * u;
  const UnitArg arg{z, (1.0 - u) * (1.0 + u)};
  const double x1 = 1.0 / std::sqrt(1.0 + z), x2 = u * x1;
  ComboForms r;
  r.from_L = {x2 * L(0, 0) - x1 * L(0, 1), x1 * L(1, 1) - x2 * L(1, 0), -x2 * L(0, 0) - x1 * L(0, 1),
              -x2 * L(1, 0) - x1 * L(1, 1)};
  const double minus = std::pow(arg.complement, -k0), plus = std::pow(arg.complement, k0);
  const double up = std::pow(u, k1 + 1.0), um = std::pow(u, -k1);
  auto h = [&](int i) { return h_func(i, arg, k0, k1, kWeightTol).value; };
  r.factored = {up * minus * x1 * (1.0 + 2.0 * k0 + 2.0 * k1) / (1.0 + 2.0 * k1) * h(1),
                um * minus * x1 * h(2),
                -up * plus * x1 * (1.0 - 2.0 * k0 + 2.0 * k1) / (1.0 + 2.0 * k1) * h(3),
                -um * plus * x1 * h(4)};
  return r;
}

}  // namespace matweight

#endif  // MATWEIGHT_WEIGHT_HPP
