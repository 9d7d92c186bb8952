#ifndef MATWEIGHT_SUMS_HPP
#define MATWEIGHT_SUMS_HPP

// Exact terminating sums in Q[k0, k1] and Q: the alpha/beta sequences, the
// spherical inner products, the terminating 3F2 values, Chu-Vandermonde and
// the squeeze ordering.

#include <stdexcept>
#include <utility>
#include <vector>

#include "matweight/param_poly.hpp"

namespace matweight {

/// Which spherical pairing: <phi^{2n} p12, p12>_S or <phi^{2n+1} p14, p12>_S.
enum class Pairing { p12, p14 };

inline const char* to_string(Pairing k) { return k == Pairing::p12 ? "p12" : "p14"; }

struct AlphaBetaSeq {
  int n_max = 0;
  std::vector<ParamPoly> alpha;
  std::vector<ParamPoly> beta;
};

namespace detail {
inline ParamPoly constant(long num, long den = 1) { return ParamPoly(Rational(num, den)); }
inline Rational integer(long v) { return Rational(v); }
}  // namespace detail

/// 1 + 2k0 + 2k1, the value of <p12, p12>_S.
inline ParamPoly p12_norm() { return detail::constant(1) + k0().scaled(2) + k1().scaled(2); }

/// alpha_n and beta_n for n = 0..n_max from the first-order recurrence
/// with alpha_0 = 1.
inline AlphaBetaSeq alpha_beta_recurrence(int n_max) {
  if (n_max < 0) throw std::invalid_argument("alpha_beta_recurrence: n_max must be >= 0");
  using detail::constant;
  AlphaBetaSeq seq;
  seq.n_max = n_max;
  const ParamPoly plus = p12_norm();                                         // 1 + 2k1 + 2k0
  const ParamPoly minus = constant(1) + k1().scaled(2) - k0().scaled(2);     // 1 + 2k1 - 2k0
  for (long n = 0; n <= n_max; ++n) {
    ParamPoly alpha;
    if (n == 0) {
      alpha = constant(1);
    } else {
      const ParamPoly& a_prev = seq.alpha.back();
      const ParamPoly& b_prev = seq.beta.back();
      alpha = plus.scaled(Rational(-1, 2 * n + 1)) * b_prev +
              (constant(2 * n - 1) - k0().scaled(2)).scaled(Rational(1, 2 * n + 1)) * a_prev;
    }
    ParamPoly beta = minus.scaled(Rational(-1, 2 * (n + 1))) * alpha;
    if (n > 0) {
      beta += (constant(2 * n + 1) + k0().scaled(2)).scaled(Rational(n, (n + 1) * (2 * n + 1))) *
              seq.beta.back();
    }
    seq.alpha.push_back(std::move(alpha));
    seq.beta.push_back(std::move(beta));
  }
  return seq;
}

/// Closed-form terminating sum for alpha_n.
inline ParamPoly alpha_closed(int n) {
  if (n < 0) throw std::invalid_argument("alpha_closed: n must be >= 0");
  const unsigned un = static_cast<unsigned>(n);
  const ParamPoly kp = k1() + k0();
  const ParamPoly km = k1() - k0();
  const Rational norm = factorial(un) * poch(Rational(3, 2), un);
  ParamPoly sum;
  for (unsigned j = 0; j <= un; ++j) {
    Rational mn = poch(Rational(-n), j);
    Rational coef = mn * mn / (norm * factorial(j));
    sum += (poch(-k1(), j) * poch(detail::constant(3, 2) + kp, un - j) *
            poch(detail::constant(1, 2) + km, un - j))
               .scaled(coef);
  }
  return sum;
}

/// Closed-form terminating sum for beta_n.
inline ParamPoly beta_closed(int n) {
  if (n < 0) throw std::invalid_argument("beta_closed: n must be >= 0");
  const unsigned un = static_cast<unsigned>(n);
  const ParamPoly kp = k1() + k0();
  const ParamPoly km = k1() - k0();
  const Rational norm = factorial(un + 1) * poch(Rational(3, 2), un);
  ParamPoly sum;
  for (unsigned j = 0; j <= un; ++j) {
    Rational coef = -(poch(Rational(-n), j) * poch(Rational(-1 - n), j)) / (norm * factorial(j));
    sum += (poch(-k1(), j) * poch(detail::constant(3, 2) + kp, un - j) *
            poch(detail::constant(1, 2) + km, un + 1 - j))
               .scaled(coef);
  }
  return sum;
}

/// 2^{4n} (2n)! (2n+1)!, relating alpha'_n to alpha_n.
inline Rational alpha_prime_scale(int n) {
  const unsigned un = static_cast<unsigned>(n);
  return pow(Rational(2), 4 * un) * factorial(2 * un) * factorial(2 * un + 1);
}

/// 2^{4n+2} (2n+1)! (2n+2)!, relating beta'_n to beta_n.
inline Rational beta_prime_scale(int n) {
  const unsigned un = static_cast<unsigned>(n);
  return pow(Rational(2), 4 * un + 2) * factorial(2 * un + 1) * factorial(2 * un + 2);
}

/// <phi^{2n} p12, p12>_S or <phi^{2n+1} p14, p12>_S from the
/// (1/2)_{n+1}-normalised sums, valid for arbitrary k0, k1.
inline ParamPoly s_inner_closed(int n, Pairing kind) {
  if (n < 0) throw std::invalid_argument("s_inner_closed: n must be >= 0");
  const unsigned un = static_cast<unsigned>(n);
  const ParamPoly a = detail::constant(1, 2) + k1() + k0();
  const ParamPoly b = detail::constant(1, 2) + k1() - k0();
  const Rational half_poch = poch(Rational(1, 2), un + 1);
  ParamPoly sum;
  if (kind == Pairing::p12) {
    const Rational norm = factorial(un) * half_poch;
    for (unsigned j = 0; j <= un; ++j) {
      Rational mn = poch(Rational(-n), j);
      sum += (poch(-k1(), j) * poch(a, un + 1 - j) * poch(b, un - j)).scaled(mn * mn / (norm * factorial(j)));
    }
  } else {
    const Rational norm = factorial(un + 1) * half_poch;
    for (unsigned j = 0; j <= un; ++j) {
      Rational c = -(poch(Rational(-n), j) * poch(Rational(-n - 1), j)) / (norm * factorial(j));
      sum += (poch(-k1(), j) * poch(a, un + 1 - j) * poch(b, un + 1 - j)).scaled(c);
    }
  }
  return sum;
}

/// Raised when a lower Pochhammer parameter of a terminating sum vanishes.
class degenerate_parameter : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Terminating 3F2(-n, upper1, upper2; lower1, lower2; 1), exact.
inline Rational terminating_3f2(int n, const Rational& upper1, const Rational& upper2, const Rational& lower1,
                                const Rational& lower2) {
  Rational term(1), sum(1);
  for (int j = 0; j < n; ++j) {
    Rational den = Rational(j + 1) * (lower1 + Rational(j)) * (lower2 + Rational(j));
    if ((lower1 + Rational(j)).is_zero() || (lower2 + Rational(j)).is_zero())
      throw degenerate_parameter("terminating_3f2: lower parameter Pochhammer vanishes");
    term *= Rational(j - n) * (upper1 + Rational(j)) * (upper2 + Rational(j)) / den;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

/// The two terminating 3F2(...;1) sums f1(n), f2(n) at exact parameters.
inline std::pair<Rational, Rational> f_values(int n, const Rational& k0v, const Rational& k1v) {
  if (n < 0) throw std::invalid_argument("f_values: n must be >= 0");
  const Rational half(1, 2);
  const Rational nn(n);
  Rational f1 = terminating_3f2(n, -nn, -k1v, -nn - half - k1v - k0v, -nn + half - k1v + k0v);
  Rational f2 = terminating_3f2(n, -nn - Rational(1), -k1v, -nn - half - k1v - k0v, -nn - half - k1v + k0v);
  return {f1, f2};
}

/// Prefactor linking f1(n) to <phi^{2n} p12, p12>_S (kind p12) or f2(n) to
/// <phi^{2n+1} p14, p12>_S (kind p14), evaluated exactly.
inline Rational f_prefactor(int n, Pairing kind, const Rational& k0v, const Rational& k1v) {
  const unsigned un = static_cast<unsigned>(n);
  const Rational half(1, 2);
  const Rational a = half + k1v + k0v, b = half + k1v - k0v;
  if (kind == Pairing::p12)
    return poch(a, un + 1) * poch(b, un) / (poch(half, un + 1) * factorial(un));
  return -(poch(a, un + 1) * poch(b, un + 1)) / (poch(half, un + 1) * factorial(un + 1));
}

/// (2F1(-n, -k1; -n-2k1; 1) summed termwise, (1+k1)_n / (1+2k1)_n).
inline std::pair<Rational, Rational> chu_vandermonde(int n, const Rational& k1v) {
  if (n < 0) throw std::invalid_argument("chu_vandermonde: n must be >= 0");
  const unsigned un = static_cast<unsigned>(n);
  const Rational lower = Rational(-n) - Rational(2) * k1v;
  Rational term(1), sum(1);
  for (int j = 0; j < n; ++j) {
    if ((lower + Rational(j)).is_zero())
      throw degenerate_parameter("chu_vandermonde: (-n-2k1)_j vanishes");
    term *= Rational(j - n) * (-k1v + Rational(j)) / (Rational(j + 1) * (lower + Rational(j)));
    sum += term;
  }
  Rational den = poch(Rational(1) + Rational(2) * k1v, un);
  if (den.is_zero()) throw degenerate_parameter("chu_vandermonde: (1+2k1)_n vanishes");
  return {sum, poch(Rational(1) + k1v, un) / den};
}

/// The three quantities of the squeeze ordering and which chains hold.
struct SqueezeReport {
  Rational s_sum;   ///< 3F2(-n,-n,c; -n-a,-n-b; 1)
  Rational middle;  ///< (1+a+b+c)_n / (1+a+b)_n
  Rational u_sum;   ///< 3F2(-n,-n-1,c; -n-a,-n-b-1; 1)
  bool ordering_c_nonneg = false;  ///< u_sum <= middle <= s_sum
  bool ordering_c_nonpos = false;  ///< s_sum <= middle <= u_sum
  bool holds = false;              ///< the chain required by the sign of c holds
};

/// Requires 0 < a < 1, -1 < b < 0, c > -1.
inline SqueezeReport squeeze_check(int n, const Rational& a, const Rational& b, const Rational& c) {
  if (n < 0) throw std::invalid_argument("squeeze_check: n must be >= 0");
  if (!(a > Rational(0) && a < Rational(1) && b > Rational(-1) && b < Rational(0) && c > Rational(-1)))
    throw std::domain_error("squeeze_check: need 0<a<1, -1<b<0, c>-1");
  const Rational nn(n), one(1);
  SqueezeReport r;
  r.s_sum = terminating_3f2(n, -nn, c, -nn - a, -nn - b);
  r.u_sum = terminating_3f2(n, -nn - one, c, -nn - a, -nn - b - one);
  r.middle = poch(one + a + b + c, static_cast<unsigned>(n)) / poch(one + a + b, static_cast<unsigned>(n));
  r.ordering_c_nonneg = r.u_sum <= r.middle && r.middle <= r.s_sum;
  r.ordering_c_nonpos = r.s_sum <= r.middle && r.middle <= r.u_sum;
  r.holds = (c.sign() < 0 || r.ordering_c_nonneg) && (c.sign() > 0 || r.ordering_c_nonpos);
  return r;
}

}  // namespace matweight

#endif  // MATWEIGHT_SUMS_HPP
