#ifndef MATWEIGHT_GAMMA_HPP
#define MATWEIGHT_GAMMA_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace matweight {

/// Relative accuracy claimed for gamma_fn on the arguments used here
/// (|x| <= 20 away from poles). Checked against std::tgamma in the tests.
inline constexpr double kGammaRelErr = 1e-14;

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoef{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

/// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

inline double lanczos_gamma(double x) {  // x >= 1/2
  x -= 1.0;
  double a = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) a += kLanczosCoef[i] / (x + static_cast<double>(i));
  double t = x + kLanczosG + 0.5;
  // t^(x+1/2) e^-t, split to delay overflow
  double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * a;
}

}  // namespace detail

/// Gamma function via Lanczos, with reflection below 1/2. Throws
/// std::domain_error at the poles 0, -1, -2, ...
inline double gamma_fn(double x) {
  if (detail::is_nonpositive_integer(x)) throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x == std::floor(x) && x <= 21.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) return std::numbers::pi / (detail::sin_pi(x) * detail::lanczos_gamma(1.0 - x));
  return detail::lanczos_gamma(x);
}

/// 1 / Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (detail::is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

/// (a)_n / (b)_n and its large-n asymptote Gamma(b)/Gamma(a) n^{a-b}.
struct StirlingRatio {
  double ratio = 1.0;
  double asymptote = 1.0;
};

inline StirlingRatio stirling_ratio(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("stirling_ratio: n must be >= 1");
  if (detail::is_nonpositive_integer(b)) throw std::domain_error("stirling_ratio: pole in Gamma(b)");
  StirlingRatio r;
  for (int i = 0; i < n; ++i) {
    if (b + i == 0.0) throw std::domain_error("stirling_ratio: (b)_n vanishes");
    r.ratio *= (a + i) / (b + i);
  }
  r.asymptote = a == b ? 1.0 : gamma_fn(b) * rgamma(a) * std::pow(static_cast<double>(n), a - b);
  return r;
}

}  // namespace matweight

#endif  // MATWEIGHT_GAMMA_HPP
