#ifndef MATWEIGHT_QUADRATURE_HPP
#define MATWEIGHT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "matweight/gamma.hpp"
#include "matweight/hypergeometric.hpp"

namespace matweight {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< difference between the last two refinements
  int nodes = 1;
};

/// N-point rule on [0, 1] for the weight v^alpha (1 - v)^beta. Nodes are
/// returned together with their complements 1 - v.
struct JacobiRule {
  std::vector<double> node;
  std::vector<double> complement;
  std::vector<double> weight;
};

namespace detail {

/// Implicit QL on a symmetric tridiagonal matrix (diagonal d, subdiagonal
/// e[1..n-1]). On return d holds the eigenvalues and z the first component
/// of each normalised eigenvector.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  auto D = [&](int i) -> double& { return d[static_cast<std::size_t>(i)]; };
  auto E = [&](int i) -> double& { return e[static_cast<std::size_t>(i)]; };
  auto Z = [&](int i) -> double& { return z[static_cast<std::size_t>(i)]; };
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::fabs(D(m)) + std::fabs(D(m + 1));
        if (std::fabs(E(m)) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("gauss_jacobi_rule: QL iteration did not converge");
      double g = (D(l + 1) - D(l)) / (2.0 * E(l));
      double r = std::hypot(g, 1.0);
      g = D(m) - D(l) + E(l) / (g + (g >= 0.0 ? r : -r));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * E(i);
        const double b = c * E(i);
        r = std::hypot(f, g);
        E(i + 1) = r;
        if (r == 0.0) {
          D(i + 1) -= p;
          E(m) = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = D(i + 1) - p;
        r = (D(i) - g) * s + 2.0 * c * b;
        p = s * r;
        D(i + 1) = g + p;
        g = c * r - b;
        f = Z(i + 1);
        Z(i + 1) = s * Z(i) + c * f;
        Z(i) = c * Z(i) - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      D(l) -= p;
      E(l) = g;
      E(m) = 0.0;
    }
  }
}

}  // namespace detail

/// Gauss-Jacobi rule by Golub-Welsch. Exact for polynomials of degree
/// 2N - 1 against v^alpha (1 - v)^beta.
inline JacobiRule gauss_jacobi_rule(int N, double alpha, double beta) {
  if (N < 1) throw std::invalid_argument("gauss_jacobi_rule: N must be >= 1");
  if (!(alpha > -1.0 && beta > -1.0)) throw std::domain_error("gauss_jacobi_rule: exponents must exceed -1");
  // Jacobi polynomials on [-1, 1] with weight (1-x)^a (1+x)^b, x = 2v - 1.
  const double a = beta, b = alpha, ab = a + b;
  std::vector<double> d(static_cast<std::size_t>(N)), e(static_cast<std::size_t>(N), 0.0),
      z(static_cast<std::size_t>(N), 0.0);
  d[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < N; ++k) {
    const double kk = k, s = 2.0 * kk + ab;
    d[static_cast<std::size_t>(k)] = (b * b - a * a) / (s * (s + 2.0));
    double sub2 = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                         : 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    e[static_cast<std::size_t>(k)] = std::sqrt(sub2);
  }
  z[0] = 1.0;
  detail::tridiagonal_ql(d, e, z);

  // total mass B(alpha + 1, beta + 1)
  const double mass =
      alpha + beta + 2.0 < 150.0
          ? gamma_fn(alpha + 1.0) * gamma_fn(beta + 1.0) * rgamma(alpha + beta + 2.0)
          : std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
  std::vector<std::size_t> order(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  JacobiRule rule;
  for (std::size_t i : order) {
    rule.node.push_back(0.5 * (1.0 + d[i]));
    rule.complement.push_back(0.5 * (1.0 - d[i]));
    rule.weight.push_back(mass * z[i] * z[i]);
  }
  return rule;
}

inline constexpr double kQuadTol = 1e-10;
inline constexpr int kJacobiStartNodes = 16;
inline constexpr int kJacobiMaxNodes = 2048;

/// Integral of v^alpha (1 - v)^beta smooth(v) over [0, 1]. smooth may take
/// (v) or (v, 1 - v). The node count doubles until two successive rules
/// agree to relative tolerance tol.
template <class Smooth>
QuadResult singular_integral(double alpha, double beta, Smooth&& smooth, double tol = kQuadTol) {
  if (!(alpha > -1.0 && beta > -1.0)) throw std::domain_error("singular_integral: exponents must exceed -1");
  if (!(tol > 0.0)) throw std::invalid_argument("singular_integral: tol must be positive");
  auto apply = [&](int N) {
    const JacobiRule rule = gauss_jacobi_rule(N, alpha, beta);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      double f;
      if constexpr (std::is_invocable_v<Smooth&, double, double>) f = smooth(rule.node[i], rule.complement[i]);
      else f = smooth(rule.node[i]);
      sum += rule.weight[i] * f;
    }
    return sum;
  };
  double prev = apply(kJacobiStartNodes);
  int total = kJacobiStartNodes;
  for (int N = 2 * kJacobiStartNodes; N <= kJacobiMaxNodes; N *= 2) {
    const double cur = apply(N);
    total += N;
    const double diff = std::fabs(cur - prev);
    if (diff <= tol * std::fabs(cur) || diff == 0.0) return {cur, diff, total};
    prev = cur;
  }
  throw tolerance_unreachable("singular_integral: no convergence within the node budget");
}

inline QuadResult singular_integral(double alpha, double beta, double tol = kQuadTol) {
  return singular_integral(alpha, beta, [](double) { return 1.0; }, tol);
}

inline constexpr int kTanhSinhMaxLevel = 12;

/// Double-exponential rule on [0, 1]. f is called as f(t, 1 - t) with both
/// arguments accurate, so endpoint singularities can be resolved. Levels
/// halve the step until successive estimates agree to relative tolerance tol.
template <class F>
QuadResult tanh_sinh(F&& f, double tol = kQuadTol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tanh_sinh: tol must be positive");
  constexpr double t_max = 6.5;  // reaches t ~ 1e-300 at either end
  auto point = [&](double t) {
    const double s = 0.5 * std::numbers::pi * std::sinh(t);
    const double x = 1.0 / (1.0 + std::exp(-2.0 * s));
    const double w = 1.0 / (1.0 + std::exp(2.0 * s));
    const double dx = std::numbers::pi * std::cosh(t) * x * w;
    if (x == 0.0 || w == 0.0 || dx == 0.0) return 0.0;
    return dx * f(x, w);
  };
  double h = 0.5;
  double sum = point(0.0);
  int nodes = 1;
  for (double t = h; t <= t_max; t += h) {
    sum += point(t) + point(-t);
    nodes += 2;
  }
  double prev = h * sum;
  for (int level = 1; level <= kTanhSinhMaxLevel; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) {
      sum += point(t) + point(-t);
      nodes += 2;
    }
    const double cur = h * sum;
    const double diff = std::fabs(cur - prev);
    if (level >= 3 && (diff <= tol * std::fabs(cur) || diff == 0.0)) return {cur, diff, nodes};
    prev = cur;
  }
  throw tolerance_unreachable("tanh_sinh: no convergence within the level budget");
}

/// (integral, asymptote) for
///   int_0^1 t^alpha (1-t)^{n+gamma} (1+t)^{beta-n} g(t) dt
///   ~ (2n)^{-alpha-1} Gamma(alpha+1) g(0).
/// The integral is computed after t = v / (2 - v), which turns it into
///   2^{-alpha-1} int_0^1 v^alpha (1-v)^{n+gamma} (1-v/2)^{-alpha-beta-gamma-2} g(v/(2-v)) dv.
inline std::pair<double, double> asym_integral_check(double alpha, double beta, double gamma, int n,
                                                     const std::function<double(double)>& g = {}) {
  if (!(alpha > -1.0 && gamma > -1.0)) throw std::domain_error("asym_integral_check: requires alpha, gamma > -1");
  if (n < 2) throw std::invalid_argument("asym_integral_check: n must be >= 2");
  auto gv = [&](double t) { return g ? g(t) : 1.0; };
  const double e = -alpha - beta - gamma - 2.0;
  auto smooth = [&](double v) { return std::pow(1.0 - 0.5 * v, e) * gv(v / (2.0 - v)); };
  const QuadResult q = singular_integral(alpha, n + gamma, smooth, 1e-12);
  const double integral = std::pow(2.0, -alpha - 1.0) * q.value;
  const double asymptote = std::pow(2.0 * n, -alpha - 1.0) * gamma_fn(alpha + 1.0) * gv(0.0);
  return {integral, asymptote};
}

}  // namespace matweight

#endif  // MATWEIGHT_QUADRATURE_HPP
