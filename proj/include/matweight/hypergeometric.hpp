#ifndef MATWEIGHT_HYPERGEOMETRIC_HPP
#define MATWEIGHT_HYPERGEOMETRIC_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "matweight/gamma.hpp"
#include "matweight/sums.hpp"

namespace matweight {

/// A series value with a bound on |value - exact|.
struct HypResult {
  double value = 0.0;
  double tail_bound = 0.0;  ///< truncation bound plus a rounding allowance
  int terms_used = 1;
};

/// Argument z in [0, 1] carried together with 1 - z, so callers near z = 1
/// can supply the complement without cancellation.
struct UnitArg {
  double z = 0.0;
  double complement = 1.0;

  static UnitArg from_z(double z) { return {z, 1.0 - z}; }
};

/// Raised when the requested tolerance cannot be met.
class tolerance_unreachable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultHypTol = 1e-12;

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr long kMaxSeriesTerms = 20'000'000;

/// Forward summation of sum_m (a)_m (b)_m / ((c)_m m!) z^m for 0 <= z <= 1.
///
/// Once t_{m+1} is added, every later ratio t_{j+1}/t_j (j >= m+1) is at most
///   rho = z * max(1, (j+|a|)/(j+1)) * (j+|b|)/(j-|c|),  j = m+1,
/// so the tail is bounded by |t_{m+1}| rho / (1 - rho) once rho < 1.
inline HypResult forward_series(double a, double b, double c, double z, double tol) {
  const double aa = std::fabs(a), ab = std::fabs(b), ac = std::fabs(c);
  double term = 1.0, sum = 1.0, abs_sum = 1.0;
  for (long m = 0; m < kMaxSeriesTerms; ++m) {
    const double md = static_cast<double>(m);
    term *= (a + md) * (b + md) / ((c + md) * (md + 1.0)) * z;
    if (term == 0.0) {
      return {sum, 4.0 * kEps * abs_sum, static_cast<int>(m + 1)};
    }
    sum += term;
    abs_sum += std::fabs(term);
    const double j = md + 1.0;  // ratio index of the next term
    if (j > ac + 1.0) {
      double rho = z * std::max(1.0, (j + aa) / (j + 1.0)) * (j + ab) / (j - ac);
      if (rho < 1.0) {
        double tail = std::fabs(term) * rho / (1.0 - rho);
        double rounding = 4.0 * kEps * abs_sum;
        // stop at tol, or once the tail is below the rounding floor
        if (tail + rounding <= tol || tail <= rounding) return {sum, tail + rounding, static_cast<int>(m + 2)};
      }
    }
  }
  throw tolerance_unreachable("gauss_2f1: series did not converge within the term budget");
}

inline bool terminates(double a, double b) { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

/// Accepts when tail_bound <= tol * max(1, |value|).
inline bool within(double bound, double value, double tol) { return bound <= tol * std::max(1.0, std::fabs(value)); }

inline HypResult checked(HypResult r, double tol) {
  if (!within(r.tail_bound, r.value, tol)) throw tolerance_unreachable("gauss_2f1: requested tolerance not reachable in double precision");
  return r;
}

}  // namespace detail

/// Parameters of F(c-a, c-b; c; z) and the prefactor (1-z)^{c-a-b} with
/// F(a, b; c; z) = prefactor * F(c-a, c-b; c; z).
struct EulerTransformed {
  double a, b, c, z, prefactor;
};

inline EulerTransformed euler_transform(double a, double b, double c, UnitArg arg) {
  if (!(arg.z < 1.0)) throw std::domain_error("euler_transform: requires z < 1");
  return {c - a, c - b, c, arg.z, std::pow(arg.complement, c - a - b)};
}

inline EulerTransformed euler_transform(double a, double b, double c, double z) {
  return euler_transform(a, b, c, UnitArg::from_z(z));
}

/// Plain forward summation of the Gauss series, no transformation.
inline HypResult gauss_2f1_series(double a, double b, double c, double z, double tol = kDefaultHypTol) {
  if (detail::is_nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a non-positive integer");
  if (!(z >= 0.0 && z < 1.0) && !(z == 1.0 && detail::terminates(a, b)))
    throw std::domain_error("gauss_2f1_series: requires 0 <= z < 1");
  if (z == 0.0) return {1.0, 0.0, 1};
  return detail::checked(detail::forward_series(a, b, c, z, tol), tol);
}

/// Gauss hypergeometric function 2F1(a, b; c; z) for 0 <= z <= 1.
///
/// z <= 0.9 is summed directly. Above 0.9 the connection formula to 1 - z is
/// used; its two pieces cancel when c - a - b is close to an integer, and the
/// returned bound grows accordingly. Exactly integer c - a - b falls back to
/// direct summation (after the Euler transform if c - a - b < 0), which is
/// only practical for z not too close to 1.
/// z = 1 uses Gauss's summation and requires c - a - b > 0.
/// The result is accepted when tail_bound <= tol * max(1, |value|);
/// otherwise tolerance_unreachable is thrown.
inline HypResult gauss_2f1(double a, double b, double c, UnitArg arg, double tol = kDefaultHypTol) {
  const double z = arg.z, w = arg.complement;
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("gauss_2f1: requires 0 <= z <= 1");
  if (detail::is_nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a non-positive integer");
  if (z == 0.0) return {1.0, 0.0, 1};
  if (detail::terminates(a, b)) return detail::checked(detail::forward_series(a, b, c, z, tol), tol);

  const double excess = c - a - b;
  if (w == 0.0 || z == 1.0) {
    if (!(excess > 0.0)) throw std::domain_error("gauss_2f1: divergent at z = 1 (needs c - a - b > 0)");
    double v = gamma_fn(c) * gamma_fn(excess) * rgamma(c - a) * rgamma(c - b);
    double bound = 4.0 * kGammaRelErr * std::fabs(v);
    if (!detail::within(bound, v, tol)) throw tolerance_unreachable("gauss_2f1: tolerance below Gamma accuracy at z = 1");
    return {v, bound, 1};
  }
  if (z <= 0.9) return detail::checked(detail::forward_series(a, b, c, z, tol), tol);

  const double near_int = std::fabs(excess - std::round(excess));
  if (near_int > 1e-12) {
    const double ca = gamma_fn(c) * gamma_fn(excess) * rgamma(c - a) * rgamma(c - b);
    const double cb = gamma_fn(c) * gamma_fn(-excess) * rgamma(a) * rgamma(b);
    const double wpow = std::pow(w, excess);
    const double scale = std::max({1.0, std::fabs(ca), std::fabs(cb * wpow)});
    HypResult f1{1.0, 0.0, 0}, f2{0.0, 0.0, 0};
    const double sub_tol = std::max(0.25 * tol / scale, 1e-15);
    if (ca != 0.0) f1 = detail::forward_series(a, b, 1.0 - excess, w, sub_tol);
    if (cb != 0.0) f2 = detail::forward_series(c - a, c - b, 1.0 + excess, w, sub_tol);
    const double p1 = ca * f1.value, p2 = cb * wpow * f2.value;
    double bound = std::fabs(ca) * f1.tail_bound + std::fabs(cb * wpow) * f2.tail_bound +
                   4.0 * kGammaRelErr * (std::fabs(p1) + std::fabs(p2));
    if (!detail::within(bound, p1 + p2, tol))
      throw tolerance_unreachable("gauss_2f1: tolerance below accuracy of connection formula");
    return {p1 + p2, bound, f1.terms_used + f2.terms_used};
  }
  if (excess < 0.0) {
    EulerTransformed t = euler_transform(a, b, c, arg);
    HypResult r = detail::forward_series(t.a, t.b, t.c, t.z, tol / std::max(1.0, t.prefactor));
    return detail::checked({t.prefactor * r.value, t.prefactor * r.tail_bound, r.terms_used}, tol);
  }
  return detail::checked(detail::forward_series(a, b, c, z, tol), tol);
}

inline HypResult gauss_2f1(double a, double b, double c, double z, double tol = kDefaultHypTol) {
  return gauss_2f1(a, b, c, UnitArg::from_z(z), tol);
}

/// Parameters (a, b, c) of h_i, i = 1..4.
inline std::array<double, 3> h_params(int i, double k0v, double k1v) {
  switch (i) {
    case 1: return {-k0v, 0.5 - k0v + k1v, 1.5 + k1v};
    case 2: return {-k0v, -0.5 - k0v - k1v, 0.5 - k1v};
    case 3: return {k0v, 0.5 + k0v + k1v, 1.5 + k1v};
    case 4: return {k0v, -0.5 + k0v - k1v, 0.5 - k1v};
    default: throw std::invalid_argument("h_func: index must be 1..4");
  }
}

/// h_i(z) for 0 <= z <= 1 and |k0| < 1/2 (so that c - a - b = 1 -+ 2k0 > 0).
inline HypResult h_func(int i, UnitArg arg, double k0v, double k1v, double tol = kDefaultHypTol) {
  if (!(arg.z >= 0.0 && arg.z <= 1.0)) throw std::domain_error("h_func: z must lie in [0, 1]");
  if (!(std::fabs(k0v) < 0.5)) throw std::domain_error("h_func: requires |k0| < 1/2");
  auto [a, b, c] = h_params(i, k0v, k1v);
  return gauss_2f1(a, b, c, arg, tol);
}

inline HypResult h_func(int i, double z, double k0v, double k1v, double tol = kDefaultHypTol) {
  return h_func(i, UnitArg::from_z(z), k0v, k1v, tol);
}

/// h_i(1 - w) = regular(w) + singular(w) * w^exponent with regular and
/// singular analytic near w = 0 (the connection formula to 1 - z). When h_i
/// terminates or the exponent is within 1e-12 of an integer, the whole value
/// is returned as regular and singular is 0.
struct ConnectionParts {
  double regular = 0.0;
  double singular = 0.0;
  double exponent = 1.0;
};

inline ConnectionParts h_connection(int i, double w, double k0v, double k1v, double tol = kDefaultHypTol) {
  if (!(w >= 0.0 && w < 1.0)) throw std::domain_error("h_connection: requires 0 <= w < 1");
  if (!(std::fabs(k0v) < 0.5)) throw std::domain_error("h_connection: requires |k0| < 1/2");
  auto [a, b, c] = h_params(i, k0v, k1v);
  const double e = c - a - b;
  if (detail::terminates(a, b) || std::fabs(e - std::round(e)) <= 1e-12)
    return {h_func(i, UnitArg{1.0 - w, w}, k0v, k1v, tol).value, 0.0, e};
  const double ca = gamma_fn(c) * gamma_fn(e) * rgamma(c - a) * rgamma(c - b);
  const double cb = gamma_fn(c) * gamma_fn(-e) * rgamma(a) * rgamma(b);
  ConnectionParts r;
  r.exponent = e;
  if (ca != 0.0) r.regular = ca * gauss_2f1_series(a, b, 1.0 - e, w, tol / std::max(1.0, std::fabs(ca))).value;
  if (cb != 0.0)
    r.singular = cb * gauss_2f1_series(c - a, c - b, 1.0 + e, w, tol / std::max(1.0, std::fabs(cb))).value;
  return r;
}

/// f_i(n) n^{k1} Gamma(1+k1) / Gamma(1+2k1) for i = 1, 2. Both tend to 1
/// when the normalising constant is cos(pi k0) cos(pi k1) / (2 pi).
inline std::pair<double, double> asym_f_check(int n, const Rational& k0v, const Rational& k1v) {
  const Rational half(1, 2);
  if (!(k0v + k1v > -half && k0v + k1v < half && k0v - k1v > -half && k0v - k1v < half))
    throw std::domain_error("asym_f_check: requires -1/2 < k0 +- k1 < 1/2");
  if (n < 1) throw std::invalid_argument("asym_f_check: n must be >= 1");
  auto [f1, f2] = f_values(n, k0v, k1v);
  const double k1d = k1v.to_double();
  const double norm = std::pow(static_cast<double>(n), k1d) * gamma_fn(1.0 + k1d) / gamma_fn(1.0 + 2.0 * k1d);
  return {f1.to_double() * norm, f2.to_double() * norm};
}

}  // namespace matweight

#endif  // MATWEIGHT_HYPERGEOMETRIC_HPP
