#ifndef MATWEIGHT_SUITES_HPP
#define MATWEIGHT_SUITES_HPP

// Verification suites behind `matweight verify`. Each returns a Report whose
// records are sorted by name.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "matweight/dunkl.hpp"
#include "matweight/hypergeometric.hpp"
#include "matweight/quadrature.hpp"
#include "matweight/report.hpp"
#include "matweight/sector.hpp"
#include "matweight/sums.hpp"
#include "matweight/weight.hpp"

namespace matweight {

struct SuiteConfig {
  Rational k0{Rational(3, 10)};
  Rational k1{Rational(1, 10)};
  int n_max = 4;
  double tol = 1e-8;
};

namespace detail {

inline std::string indexed(const std::string& stem, const char* key, int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s=%02d", key, n);
  return stem + "/" + buf;
}

inline CheckRecord exact_record(std::string name, const ParamPoly& expected, const ParamPoly& got) {
  return {std::move(name), to_string(expected), to_string(got), 0.0, expected == got};
}

inline CheckRecord exact_record(std::string name, const Rational& expected, const Rational& got) {
  return {std::move(name), expected.str(), got.str(), 0.0, expected == got};
}

inline CheckRecord zero_record(std::string name, const VPoly& residual) {
  return {std::move(name), "0", residual.is_zero() ? "0" : "nonzero", 0.0, residual.is_zero()};
}

/// |got - expected| <= tol |expected|.
inline CheckRecord relative_record(std::string name, double expected, double got, double tol) {
  const bool ok = std::isfinite(got) && std::fabs(got - expected) <= tol * std::fabs(expected);
  return {std::move(name), format_double(expected), format_double(got), tol, ok};
}

/// |got - expected| <= tol.
inline CheckRecord absolute_record(std::string name, double expected, double got, double tol) {
  const bool ok = std::isfinite(got) && std::fabs(got - expected) <= tol;
  return {std::move(name), format_double(expected), format_double(got), tol, ok};
}

inline CheckRecord failure_record(std::string name, const std::string& expected, const std::string& what) {
  return {std::move(name), expected, what, 0.0, false};
}

inline bool in_pd_region(const Rational& k0v, const Rational& k1v) {
  const Rational half(1, 2);
  return k0v + k1v > -half && k0v + k1v < half && k0v - k1v > -half && k0v - k1v < half;
}

}  // namespace detail

/// Exact identities: recurrence vs closed forms, spherical sums, the
/// operator route, product rule and Laplacian identities, and the
/// parameter-specific terminating sums.
inline Report exact_suite(const SuiteConfig& cfg) {
  using detail::exact_record;
  using detail::indexed;
  using detail::zero_record;
  Report r;
  r.suite = "exact";
  const int nmax = cfg.n_max;

  const AlphaBetaSeq seq = alpha_beta_recurrence(nmax);
  for (int n = 0; n <= nmax; ++n) {
    const auto un = static_cast<std::size_t>(n);
    r.add(exact_record(indexed("closed_form/alpha", "n", n), seq.alpha[un], alpha_closed(n)));
    r.add(exact_record(indexed("closed_form/beta", "n", n), seq.beta[un], beta_closed(n)));
    r.add(exact_record(indexed("s_inner/p12", "n", n), seq.alpha[un] * p12_norm(), s_inner_closed(n, Pairing::p12)));
    r.add(exact_record(indexed("s_inner/p14", "n", n), seq.beta[un] * p12_norm(), s_inner_closed(n, Pairing::p14)));
  }

  const int op_max = std::min(nmax, 3);
  for (int n = 0; n <= op_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    auto [ap, bp] = alpha_beta_via_laplacian(n);
    r.add(exact_record(indexed("operator/alpha_prime", "n", n), seq.alpha[un].scaled(alpha_prime_scale(n)), ap));
    r.add(exact_record(indexed("operator/beta_prime", "n", n), seq.beta[un].scaled(beta_prime_scale(n)), bp));
  }

  const XPoly sq = norm_sq(), ph = phi();
  const VPoly phi_p14 = ph * p14();
  r.add(exact_record("operator/laplacian_phi_p14",
                     (ParamPoly(-4) - k1().scaled(8) + k0().scaled(8)), p12_multiple(laplacian(phi_p14))));
  struct Named {
    const char* name;
    XPoly f;
  };
  const Named invariants[] = {{"|x|^2", sq}, {"phi^2", ph * ph}, {"phi^4", pow(ph, 4)}, {"|x|^4", sq * sq}};
  for (const Named& f : invariants) {
    r.add(zero_record(std::string("product_rule/f=") + f.name + ",g=p12", product_rule_residual(f.f, p12())));
    r.add(zero_record(std::string("product_rule/f=") + f.name + ",g=phi*p14", product_rule_residual(f.f, phi_p14)));
  }
  for (int n = 1; n <= op_max; ++n) {
    const auto un = static_cast<unsigned>(n);
    // Delta phi^{2n} p12 = -8n(1+2k1+2k0) phi^{2n-1} p14 + 8n(2n-1-2k0) |x|^2 phi^{2n-2} p12
    VPoly lhs = laplacian(pow(ph, 2 * un) * p12());
    VPoly rhs = (pow(ph, 2 * un - 1) * p14()).scaled(p12_norm().scaled(Rational(-8 * n))) +
                (sq * pow(ph, 2 * un - 2) * p12()).scaled((ParamPoly(2 * n - 1) - k0().scaled(2)).scaled(Rational(8 * n)));
    r.add(zero_record(indexed("laplacian_identity/phi_p12", "n", n), lhs - rhs));
    // Delta phi^{2n+1} p14 = -4(2n+1)(1+2k1-2k0) phi^{2n} p12 + 8n(2n+1+2k0) |x|^2 phi^{2n-1} p14
    const ParamPoly minus = ParamPoly(1) + k1().scaled(2) - k0().scaled(2);
    lhs = laplacian(pow(ph, 2 * un + 1) * p14());
    rhs = (pow(ph, 2 * un) * p12()).scaled(minus.scaled(Rational(-4 * (2 * n + 1)))) +
          (sq * pow(ph, 2 * un - 1) * p14()).scaled((ParamPoly(2 * n + 1) + k0().scaled(2)).scaled(Rational(8 * n)));
    r.add(zero_record(indexed("laplacian_identity/phi_p14", "n", n), lhs - rhs));
  }
  for (int n = 0; n <= op_max; ++n) {
    // f = phi^n p12 has degree 2n+1
    const VPoly f = pow(ph, static_cast<unsigned>(n)) * p12();
    VPoly lhs = laplacian_power(sq * f, n + 1);
    VPoly rhs = laplacian_power(f, n).scaled(ParamPoly(4 * (n + 1) * (n + 2)));
    r.add(zero_record(indexed("laplacian_identity/norm_sq_shift", "n", n), lhs - rhs));
  }

  // parameter-specific exact checks
  const Rational& k0v = cfg.k0;
  const Rational& k1v = cfg.k1;
  for (int n = 0; n <= nmax; ++n) {
    try {
      auto [f1, f2] = f_values(n, k0v, k1v);
      r.add(exact_record(indexed("f_values/p12", "n", n), poly_eval(s_inner_closed(n, Pairing::p12), k0v, k1v),
                         f_prefactor(n, Pairing::p12, k0v, k1v) * f1));
      r.add(exact_record(indexed("f_values/p14", "n", n), poly_eval(s_inner_closed(n, Pairing::p14), k0v, k1v),
                         f_prefactor(n, Pairing::p14, k0v, k1v) * f2));
    } catch (const degenerate_parameter&) {
      // the 3F2 form is only a cross-check; skipped when its lower parameters vanish
    }
    try {
      auto [sum, ratio] = chu_vandermonde(n, k1v);
      r.add(exact_record(indexed("chu_vandermonde", "n", n), ratio, sum));
    } catch (const degenerate_parameter&) {
    }
  }
  if (detail::in_pd_region(k0v, k1v)) {
    const Rational a = Rational(1, 2) + k1v + k0v, b = Rational(-1, 2) + k1v - k0v, c = -k1v;
    for (int n = 0; n <= nmax; ++n) {
      SqueezeReport s = squeeze_check(n, a, b, c);
      const std::string chain = c.sign() >= 0 ? "u<=m<=s" : "s<=m<=u";
      r.add({indexed("squeeze", "n", n), chain, s.holds ? chain : "violated", 0.0, s.holds});
    }
  }
  r.sort_checks();
  return r;
}

/// Floating-point checks at one parameter point: the sector integrals
/// against the exact values, det K, positivity, the factored forms and a
/// few hypergeometric identities.
inline Report quad_suite(const SuiteConfig& cfg) {
  using detail::indexed;
  Report r;
  r.suite = "quad";
  const double k0v = cfg.k0.to_double(), k1v = cfg.k1.to_double();
  const ParamPoint p = ParamPoint::make(k0v, k1v);
  if (!detail::in_pd_region(cfg.k0, cfg.k1)) {
    r.add(detail::failure_record("quad/region", "-1/2 < k0 +- k1 < 1/2", "outside"));
    return r;
  }
  const double tol = cfg.tol;
  for (int n = 0; n <= cfg.n_max; ++n) {
    for (Pairing kind : {Pairing::p12, Pairing::p14}) {
      const std::string name = indexed(std::string("sector_inner/") + to_string(kind), "n", n);
      const double exact = poly_eval(s_inner_closed(n, kind), cfg.k0, cfg.k1).to_double();
      try {
        const QuadResult q = sector_inner_numeric(n, kind, p, 0.1 * tol);
        r.add(detail::relative_record(name, exact, q.value, tol));
      } catch (const std::exception& e) {
        r.add(detail::failure_record(name, format_double(exact), e.what()));
      }
      if (n <= 1) {
        const std::string rname = indexed(std::string("route_agreement/") + to_string(kind), "n", n);
        try {
          const QuadResult a = sector_inner_numeric(n, kind, p, 0.1 * tol, Route::factored);
          const QuadResult b = sector_inner_numeric(n, kind, p, 0.1 * tol, Route::direct);
          r.add(detail::relative_record(rname, a.value, b.value, tol));
        } catch (const std::exception& e) {
          r.add(detail::failure_record(rname, "agreement", e.what()));
        }
      }
    }
  }

  const double det_expected = std::cos(std::numbers::pi * (k0v + k1v)) * std::cos(std::numbers::pi * (k0v - k1v)) /
                              (4.0 * std::numbers::pi * std::numbers::pi);
  const double thetas[] = {0.05, 0.3, 0.6, 0.78};
  for (std::size_t i = 0; i < std::size(thetas); ++i) {
    const WeightEval w = eval_K(thetas[i], p);
    const std::string tag = indexed("weight", "theta_index", static_cast<int>(i));
    r.add(detail::absolute_record(tag + "/det_k", det_expected, w.detK(), 1e-10));
    const double lam = w.min_eigenvalue();
    r.add({tag + "/min_eigenvalue", ">0", format_double(lam), 0.0, lam > 0.0});
  }
  const double us[] = {0.05, 0.6, 0.95};
  for (std::size_t i = 0; i < std::size(us); ++i) {
    const ComboForms c = combo_forms(us[i], p);
    for (int j = 0; j < 4; ++j) {
      const std::string name =
          indexed(indexed("weight/combo_form", "u_index", static_cast<int>(i)), "entry", j + 1);
      r.add(detail::relative_record(name, c.factored[static_cast<std::size_t>(j)],
                                    c.from_L[static_cast<std::size_t>(j)], 1e-10));
    }
  }
  const auto [d1, d2] = d_consts(p);
  r.add(detail::relative_record("weight/d1_d2_product", det_expected, d1 * d2, 1e-12));

  // contiguous identities and the Euler round trip at fixed points
  const double pts[][4] = {{-0.3, 0.3, 0.6, 0.45}, {0.2, -0.7, 1.3, 0.8}, {0.45, 0.55, 1.9, 0.9}};
  for (std::size_t i = 0; i < std::size(pts); ++i) {
    const double a = pts[i][0], b = pts[i][1], c = pts[i][2], z = pts[i][3];
    const HypResult f = gauss_2f1(a, b, c, z), f_a1c1 = gauss_2f1(a + 1, b, c + 1, z),
                    f_bm = gauss_2f1(a, b - 1, c, z), f_c1 = gauss_2f1(a, b, c + 1, z);
    const double bound1 = f.tail_bound + std::fabs(a / c * z) * f_a1c1.tail_bound + f_bm.tail_bound;
    const double bound2 = f.tail_bound + std::fabs(a / c) * f_a1c1.tail_bound + std::fabs((c - a) / c) * f_c1.tail_bound;
    const std::string tag = indexed("hyper/contiguous", "point", static_cast<int>(i));
    r.add(detail::absolute_record(tag + "/first", f_bm.value, f.value - a / c * z * f_a1c1.value, bound1));
    r.add(detail::absolute_record(tag + "/second", (c - a) / c * f_c1.value, f.value - a / c * f_a1c1.value, bound2));
  }
  {
    const double a = -0.3, b = 0.3, c = 0.6, z = 0.95;
    const HypResult direct = gauss_2f1_series(a, b, c, z, 1e-13);
    const EulerTransformed t = euler_transform(a, b, c, z);
    const HypResult tr = gauss_2f1_series(t.a, t.b, t.c, t.z, 1e-13);
    r.add(detail::absolute_record("hyper/euler_round_trip", direct.value, t.prefactor * tr.value,
                                  direct.tail_bound + t.prefactor * tr.tail_bound));
  }
  r.sort_checks();
  return r;
}

/// Large-n behaviour: the normalised terminating sums and the endpoint
/// model integral.
inline Report asym_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = "asym";
  if (!detail::in_pd_region(cfg.k0, cfg.k1)) {
    r.add(detail::failure_record("asym/region", "-1/2 < k0 +- k1 < 1/2", "outside"));
    return r;
  }
  const auto [a200_1, a200_2] = asym_f_check(200, cfg.k0, cfg.k1);
  const auto [a2000_1, a2000_2] = asym_f_check(2000, cfg.k0, cfg.k1);
  r.add(detail::absolute_record("asym_f/f1/n=0200", 1.0, a200_1, 0.1));
  r.add(detail::absolute_record("asym_f/f1/n=2000", 1.0, a2000_1, 0.1));
  r.add(detail::absolute_record("asym_f/f2/n=0200", 1.0, a200_2, 0.1));
  r.add(detail::absolute_record("asym_f/f2/n=2000", 1.0, a2000_2, 0.1));
  const bool exact_one = cfg.k1.is_zero();  // both sums are identically 1
  auto improves = [&](double small_n, double large_n) {
    return exact_one ? large_n == 1.0 && small_n == 1.0 : std::fabs(large_n - 1.0) < std::fabs(small_n - 1.0);
  };
  r.add({"asym_f/f1/improves", "|v(2000)-1| < |v(200)-1|", format_double(std::fabs(a2000_1 - 1.0)), 0.0,
         improves(a200_1, a2000_1)});
  r.add({"asym_f/f2/improves", "|v(2000)-1| < |v(200)-1|", format_double(std::fabs(a2000_2 - 1.0)), 0.0,
         improves(a200_2, a2000_2)});

  // alpha, beta, gamma tied to the parameter point; g(t) = 1 + t
  const double k0v = cfg.k0.to_double(), k1v = cfg.k1.to_double();
  const double alpha = k1v + 0.5, beta = k0v, gamma = -2.0 * k0v;
  auto g = [](double t) { return 1.0 + t; };
  const auto [i200, s200] = asym_integral_check(alpha, beta, gamma, 200, g);
  const auto [i800, s800] = asym_integral_check(alpha, beta, gamma, 800, g);
  r.add(detail::absolute_record("asym_integral/n=0200", 1.0, i200 / s200, 0.1));
  r.add({"asym_integral/improves", "|ratio(800)-1| < |ratio(200)-1|", format_double(std::fabs(i800 / s800 - 1.0)), 0.0,
         std::fabs(i800 / s800 - 1.0) < std::fabs(i200 / s200 - 1.0)});
  r.sort_checks();
  return r;
}

}  // namespace matweight

#endif  // MATWEIGHT_SUITES_HPP
