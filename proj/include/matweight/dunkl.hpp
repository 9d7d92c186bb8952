#ifndef MATWEIGHT_DUNKL_HPP
#define MATWEIGHT_DUNKL_HPP

#include <stdexcept>
#include <utility>

#include "matweight/sums.hpp"
#include "matweight/vpoly.hpp"

namespace matweight {

/// Multiplicity attached to a positive root: k1 on e1, e2 and k0 on e1 -+ e2.
inline ParamPoly multiplicity(Root v) { return (v == Root::e1 || v == Root::e2) ? k1() : k0(); }

/// Dunkl operator D_i (i = 1, 2) on the standard module with the
/// reflection representation:
///
///   D_i f = d_i f + sum_{v in R+} k_v v_i [(f(x) - f(x s_v)) / <x, v>] s_v
///
/// where the bracket is taken componentwise on (f1, f2) and s_v then acts on
/// the value row vector.
inline VPoly dunkl_d(int i, const VPoly& f) {
  if (i != 1 && i != 2) throw std::invalid_argument("dunkl_d: coordinate index must be 1 or 2");
  const int idx = i - 1;
  VPoly out{partial(f[0], idx), partial(f[1], idx)};
  for (Root v : kPositiveRoots) {
    const int vi = root_vector(v)[static_cast<std::size_t>(idx)];
    if (vi == 0) continue;
    const GroupElement s = reflection(v);
    VPoly diff;
    for (int c = 0; c < 2; ++c) diff[c] = divide_by_root(f[c] - substitute(f[c], s), v);
    if (diff.is_zero()) continue;
    ParamPoly weight = multiplicity(v).scaled(Rational(vi));
    out += act_on_values(diff, s).scaled(weight);
  }
  return out;
}

/// Dunkl Laplacian D_1^2 + D_2^2.
inline VPoly laplacian(const VPoly& f) { return dunkl_d(1, dunkl_d(1, f)) + dunkl_d(2, dunkl_d(2, f)); }

inline VPoly laplacian_power(VPoly f, int m) {
  if (m < 0) throw std::invalid_argument("laplacian_power: m must be >= 0");
  for (int j = 0; j < m && !f.is_zero(); ++j) f = laplacian(f);
  return f;
}

inline bool is_invariant(const XPoly& f) {
  for (const GroupElement& w : GroupElement::all())
    if (substitute(f, w) != f) return false;
  return true;
}

/// LHS - RHS of the product rule for Delta_kappa with a W-invariant scalar
/// factor f:
///
///   Delta_k(f g) - f Delta_k(g) = g Delta f + 2 <grad f, grad g>
///     + 2k1 ( g(x,-t1,t2) d1f/x1 + g(x,t1,-t2) d2f/x2 )
///     + 2k0 ( g(x,t2,t1) (d1f-d2f)/(x1-x2) + g(x,-t2,-t1) (d1f+d2f)/(x1+x2) )
///
/// Zero for every admissible input; throws std::invalid_argument when f is
/// not W-invariant.
inline VPoly product_rule_residual(const XPoly& f, const VPoly& g) {
  if (!is_invariant(f)) throw std::invalid_argument("product_rule_residual: f is not W-invariant");
  const VPoly lhs = laplacian(f * g) - f * laplacian(g);

  const XPoly d1f = partial(f, 0), d2f = partial(f, 1);
  VPoly rhs = classical_laplacian(f) * g;
  for (int c = 0; c < 2; ++c) {
    XPoly grad_pair = d1f * partial(g[c], 0) + d2f * partial(g[c], 1);
    rhs[c] += grad_pair.scaled(ParamPoly(2));
  }
  const ParamPoly two_k1 = k1().scaled(2), two_k0 = k0().scaled(2);
  rhs += (divide_by_root(d1f, Root::e1) * act_on_values(g, GroupElement::sigma1())).scaled(two_k1);
  rhs += (divide_by_root(d2f, Root::e2) * act_on_values(g, GroupElement::sigma2())).scaled(two_k1);
  rhs += (divide_by_root(d1f - d2f, Root::e1_minus_e2) * act_on_values(g, GroupElement::sigma12_plus()))
             .scaled(two_k0);
  rhs += (divide_by_root(d1f + d2f, Root::e1_plus_e2) * act_on_values(g, GroupElement::sigma12_minus()))
             .scaled(two_k0);
  return lhs - rhs;
}

/// Largest n for which the operator-calculus route is supported. Cost grows
/// quickly: n = 3 takes well under a second, n = 4 a few seconds.
inline constexpr int kOperatorMaxN = 4;

/// c such that f == c p12; throws std::logic_error otherwise.
inline ParamPoly p12_multiple(const VPoly& f) {
  ParamPoly c = f[1].coeff({1, 0});
  if (f != p12().scaled(c)) throw std::logic_error("result is not a scalar multiple of p12");
  return c;
}

/// (alpha'_n, beta'_n) from Delta^{2n}(phi^{2n} p12) = alpha'_n p12 and
/// Delta^{2n+1}(phi^{2n+1} p14) = beta'_n p12.
inline std::pair<ParamPoly, ParamPoly> alpha_beta_via_laplacian(int n) {
  if (n < 0 || n > kOperatorMaxN)
    throw std::domain_error("alpha_beta_via_laplacian: supported range is 0 <= n <= 4");
  const unsigned un = static_cast<unsigned>(n);
  const XPoly ph = phi();
  const XPoly ph2n = pow(ph, 2 * un);
  VPoly a = laplacian_power(ph2n * p12(), 2 * n);
  VPoly b = laplacian_power((ph2n * ph) * p14(), 2 * n + 1);
  return {p12_multiple(a), p12_multiple(b)};
}

enum class Backend { operator_calculus, recurrence };

/// <phi^{2n} p12, p12>_S = alpha_n (1 + 2k0 + 2k1) or
/// <phi^{2n+1} p14, p12>_S = beta_n (1 + 2k0 + 2k1).
inline ParamPoly inner_product_S_exact(int n, Pairing kind, Backend backend = Backend::recurrence) {
  if (n < 0) throw std::invalid_argument("inner_product_S_exact: n must be >= 0");
  ParamPoly coeff;
  if (backend == Backend::operator_calculus) {
    if (n > kOperatorMaxN)
      throw std::domain_error("inner_product_S_exact: operator backend supports n <= 4");
    auto [ap, bp] = alpha_beta_via_laplacian(n);
    coeff = kind == Pairing::p12 ? ap.scaled(Rational(1) / alpha_prime_scale(n))
                                 : bp.scaled(Rational(1) / beta_prime_scale(n));
  } else {
    AlphaBetaSeq seq = alpha_beta_recurrence(n);
    coeff = kind == Pairing::p12 ? seq.alpha.back() : seq.beta.back();
  }
  return coeff * p12_norm();
}

}  // namespace matweight

#endif  // MATWEIGHT_DUNKL_HPP
