#ifndef MATWEIGHT_SECTOR_HPP
#define MATWEIGHT_SECTOR_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "matweight/quadrature.hpp"
#include "matweight/sums.hpp"
#include "matweight/weight.hpp"

namespace matweight {

/// factored: the d1 and d2 pieces as Jacobi-weighted integrals in v = u^2
///   with the h-function integrands.
/// direct: 8 int_0^{pi/4} phi^m f K p12^T dtheta with L from its entries.
enum class Route { factored, direct };

inline constexpr double kSectorTol = 1e-9;

namespace detail {

/// int_0^1 v^alpha (1-v)^beta g(v) h_i(v) h_j(v) dv, split at v = 1/2.
/// On [1/2, 1] each h is written as regular + singular w^e (w = 1 - v) and
/// the four products become Jacobi integrals in w with exact exponents, so
/// both halves converge geometrically in the node count.
template <class G>
QuadResult hh_integral(double alpha, double beta, G&& g, int i, int j, double k0, double k1, double tol) {
  auto hv = [&](int idx, double v) { return h_func(idx, v, k0, k1, kWeightTol).value; };
  QuadResult left = singular_integral(
      alpha, 0.0,
      [&](double s) {
        const double v = 0.5 * s;
        return std::pow(1.0 - v, beta) * g(v) * hv(i, v) * hv(j, v);
      },
      tol);
  const double left_scale = std::pow(2.0, -alpha - 1.0);
  QuadResult out{left_scale * left.value, left_scale * left.error_estimate, left.nodes};

  const double ei = h_connection(i, 0.25, k0, k1).exponent, ej = h_connection(j, 0.25, k0, k1).exponent;
  for (int pi = 0; pi < 2; ++pi) {
    for (int pj = 0; pj < 2; ++pj) {
      const double eps = beta + (pi ? ei : 0.0) + (pj ? ej : 0.0);
      auto piece = [&](double s) {
        const double w = 0.5 * s, v = 1.0 - w;
        const ConnectionParts ci = h_connection(i, w, k0, k1, kWeightTol);
        const ConnectionParts cj = h_connection(j, w, k0, k1, kWeightTol);
        return std::pow(v, alpha) * g(v) * (pi ? ci.singular : ci.regular) * (pj ? cj.singular : cj.regular);
      };
      QuadResult r = singular_integral(eps, 0.0, piece, tol);
      const double scale = std::pow(2.0, -eps - 1.0);
      out.value += scale * r.value;
      out.error_estimate += scale * r.error_estimate;
      out.nodes += r.nodes;
    }
  }
  return out;
}

inline QuadResult sector_factored(int n, Pairing kind, const ParamPoint& p, double tol) {
  const double k0 = p.k0, k1 = p.k1;
  const auto [d1, d2] = d_consts(p);
  const double sub_tol = 0.1 * tol;
  QuadResult a, b;
  double ca, cb;
  if (kind == Pairing::p12) {
    const double e = -2.0 * n - 2.0;
    auto g = [e](double v) { return 0.5 * std::pow(1.0 + v, e); };
    a = hh_integral(k1 + 0.5, 2.0 * n - 2.0 * k0, g, 1, 1, k0, k1, sub_tol);
    b = hh_integral(-k1 - 0.5, 2.0 * n - 2.0 * k0, g, 2, 2, k0, k1, sub_tol);
    const double r = (1.0 + 2.0 * k0 + 2.0 * k1) / (1.0 + 2.0 * k1);
    ca = 8.0 * d1 * r * r;
    cb = 8.0 * d2;
  } else {
    const double e = -2.0 * n - 3.0;
    auto g = [e](double v) { return 0.5 * std::pow(1.0 + v, e); };
    a = hh_integral(k1 + 0.5, 2.0 * n + 1.0, g, 1, 3, k0, k1, sub_tol);
    b = hh_integral(-k1 - 0.5, 2.0 * n + 1.0, g, 2, 4, k0, k1, sub_tol);
    ca = 8.0 * d1 * (1.0 - 2.0 * k0 + 2.0 * k1) * (1.0 + 2.0 * k0 + 2.0 * k1) / ((1.0 + 2.0 * k1) * (1.0 + 2.0 * k1));
    cb = -8.0 * d2;
  }
  return {ca * a.value + cb * b.value, std::fabs(ca) * a.error_estimate + std::fabs(cb) * b.error_estimate,
          a.nodes + b.nodes};
}

inline QuadResult sector_direct(int n, Pairing kind, const ParamPoint& p, double tol) {
  constexpr double quarter = std::numbers::pi / 4.0;
  auto integrand = [&](double t, double s) {
    const double theta = quarter * t, delta = quarter * s;
    const WeightEval w = eval_K_impl(theta, delta, p);
    const double x1 = std::cos(theta), x2 = std::sin(theta);
    const double ph = std::sin(2.0 * delta);  // x1^2 - x2^2
    // g = p12 = (-x2, x1); f = p12 or p14 = (-x2, -x1)
    const double g0 = -x2, g1 = x1;
    const double f0 = -x2, f1 = kind == Pairing::p12 ? x1 : -x1;
    const double kg0 = w.K(0, 0) * g0 + w.K(0, 1) * g1;
    const double kg1 = w.K(1, 0) * g0 + w.K(1, 1) * g1;
    const int m = kind == Pairing::p12 ? 2 * n : 2 * n + 1;
    return std::pow(ph, m) * (f0 * kg0 + f1 * kg1);
  };
  QuadResult r = tanh_sinh(integrand, tol);
  r.value *= 8.0 * quarter;
  r.error_estimate *= 8.0 * quarter;
  return r;
}

}  // namespace detail

/// <phi^{2n} p12, p12>_S (kind p12) or <phi^{2n+1} p14, p12>_S (kind p14)
/// by quadrature over the sector 0 < theta < pi/4. tol is relative.
inline QuadResult sector_inner_numeric(int n, Pairing kind, const ParamPoint& p, double tol = kSectorTol,
                                       Route route = Route::factored) {
  if (n < 0) throw std::invalid_argument("sector_inner_numeric: n must be >= 0");
  if (!p.positive_definite || !p.integrable)
    throw std::domain_error("sector_inner_numeric: requires -1/2 < k0 +- k1 < 1/2");
  if (!(tol > 0.0)) throw std::invalid_argument("sector_inner_numeric: tol must be positive");
  return route == Route::factored ? detail::sector_factored(n, kind, p, tol) : detail::sector_direct(n, kind, p, tol);
}

}  // namespace matweight

#endif  // MATWEIGHT_SECTOR_HPP
