#ifndef MATWEIGHT_VPOLY_HPP
#define MATWEIGHT_VPOLY_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matweight/param_poly.hpp"

namespace matweight {

/// Scalar polynomial in x1, x2 with coefficients in Q[k0, k1].
using XPoly = BiPoly<ParamPoly>;

inline XPoly x1() { return XPoly::variable(0); }
inline XPoly x2() { return XPoly::variable(1); }

/// Raised when an exact division by a linear form leaves a remainder.
class division_not_exact : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Partial derivative with respect to x_{index+1}.
inline XPoly partial(const XPoly& p, int index) {
  XPoly r;
  for (const auto& [m, c] : p.terms()) {
    int e = index == 0 ? m.first : m.second;
    if (e == 0) continue;
    Monomial dm = index == 0 ? Monomial{m.first - 1, m.second} : Monomial{m.first, m.second - 1};
    r.add_term(dm, c.scaled(Rational(static_cast<long>(e))));
  }
  return r;
}

/// Classical Laplacian d^2/dx1^2 + d^2/dx2^2.
inline XPoly classical_laplacian(const XPoly& p) {
  return partial(partial(p, 0), 0) + partial(partial(p, 1), 1);
}

/// Element of W(B2) acting on row vectors x -> x w by a signed permutation
/// matrix. Entry (i, j) is in {-1, 0, 1}.
class GroupElement {
public:
  using Matrix = std::array<std::array<int, 2>, 2>;

  constexpr GroupElement() : m_{{{1, 0}, {0, 1}}} {}
  explicit GroupElement(const Matrix& m) : m_(m) {
    int nonzero = 0;
    for (const auto& row : m)
      for (int v : row) {
        if (v < -1 || v > 1) throw std::invalid_argument("GroupElement: entries must be in {-1,0,1}");
        nonzero += v != 0;
      }
    if (nonzero != 2 || (m[0][0] != 0) != (m[1][1] != 0) || (m[0][1] != 0) != (m[1][0] != 0))
      throw std::invalid_argument("GroupElement: not a signed permutation");
  }

  static GroupElement identity() { return {}; }
  /// x1 -> -x1.
  static GroupElement sigma1() { return GroupElement({{{-1, 0}, {0, 1}}}); }
  /// x2 -> -x2.
  static GroupElement sigma2() { return GroupElement({{{1, 0}, {0, -1}}}); }
  /// Reflection in x1 = x2 (swap).
  static GroupElement sigma12_plus() { return GroupElement({{{0, 1}, {1, 0}}}); }
  /// Reflection in x1 = -x2.
  static GroupElement sigma12_minus() { return GroupElement({{{0, -1}, {-1, 0}}}); }

  /// All eight elements, closed under composition.
  static std::vector<GroupElement> all() {
    std::vector<GroupElement> out;
    for (int s0 : {1, -1})
      for (int s1 : {1, -1}) {
        out.emplace_back(Matrix{{{s0, 0}, {0, s1}}});
        out.emplace_back(Matrix{{{0, s0}, {s1, 0}}});
      }
    return out;
  }

  const Matrix& matrix() const { return m_; }
  int operator()(int i, int j) const { return m_[i][j]; }

  /// Matrix product (apply this, then other, to row vectors).
  GroupElement operator*(const GroupElement& o) const {
    Matrix r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j];
    return GroupElement(r);
  }
  GroupElement inverse() const { return GroupElement(Matrix{{{m_[0][0], m_[1][0]}, {m_[0][1], m_[1][1]}}}); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  Matrix m_;
};

/// p(x w): substitutes x_j -> sum_i x_i w_ij.
inline XPoly substitute(const XPoly& p, const GroupElement& w) {
  XPoly r;
  for (const auto& [m, c] : p.terms()) {
    // (xw)_j = sign_j * x_{src_j}
    int e[2] = {m.first, m.second};
    int out[2] = {0, 0};
    int sign = 1;
    for (int j = 0; j < 2; ++j) {
      int src = w(0, j) != 0 ? 0 : 1;
      out[src] += e[j];
      if (w(src, j) < 0 && (e[j] % 2) != 0) sign = -sign;
    }
    r.add_term({out[0], out[1]}, sign < 0 ? -c : c);
  }
  return r;
}

/// Linear forms of the positive roots of B2: e1, e2, e1-e2, e1+e2.
enum class Root { e1, e2, e1_minus_e2, e1_plus_e2 };

inline constexpr std::array<Root, 4> kPositiveRoots{Root::e1, Root::e2, Root::e1_minus_e2, Root::e1_plus_e2};

/// Components (v1, v2) of a positive root.
inline std::array<int, 2> root_vector(Root v) {
  switch (v) {
    case Root::e1: return {1, 0};
    case Root::e2: return {0, 1};
    case Root::e1_minus_e2: return {1, -1};
    case Root::e1_plus_e2: return {1, 1};
  }
  return {0, 0};
}

/// The reflection x -> x - 2<x,v>v/|v|^2.
inline GroupElement reflection(Root v) {
  switch (v) {
    case Root::e1: return GroupElement::sigma1();
    case Root::e2: return GroupElement::sigma2();
    case Root::e1_minus_e2: return GroupElement::sigma12_plus();
    case Root::e1_plus_e2: return GroupElement::sigma12_minus();
  }
  return {};
}

/// Exact quotient p / <x, v>. Throws division_not_exact on a nonzero
/// remainder.
inline XPoly divide_by_root(const XPoly& p, Root v) {
  XPoly q;
  switch (v) {
    case Root::e1:
    case Root::e2: {
      bool first = v == Root::e1;
      for (const auto& [m, c] : p.terms()) {
        int e = first ? m.first : m.second;
        if (e == 0) throw division_not_exact("divide_by_root: remainder after division by x_i");
        q.add_term(first ? Monomial{m.first - 1, m.second} : Monomial{m.first, m.second - 1}, c);
      }
      return q;
    }
    case Root::e1_minus_e2:
    case Root::e1_plus_e2: {
      // Divide by x1 - s x2 eliminating the highest power of x1 first.
      const Rational s = v == Root::e1_minus_e2 ? Rational(1) : Rational(-1);
      auto by_x1 = [](const Monomial& a, const Monomial& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
      };
      std::map<Monomial, ParamPoly, decltype(by_x1)> work(by_x1);
      for (const auto& [m, c] : p.terms()) work.emplace(m, c);
      while (!work.empty()) {
        auto it = std::prev(work.end());
        auto [m, c] = *it;
        work.erase(it);
        if (c.is_zero()) continue;
        if (m.first == 0) throw division_not_exact("divide_by_root: remainder after division by x1 -+ x2");
        Monomial qm{m.first - 1, m.second};
        q.add_term(qm, c);
        // subtract c x^qm (x1 - s x2): the x1 part cancels m, leaves +s c x^qm x2
        Monomial carry{qm.first, qm.second + 1};
        auto [jt, inserted] = work.try_emplace(carry, c.scaled(s));
        if (!inserted) jt->second = jt->second + c.scaled(s);
      }
      return q;
    }
  }
  return q;
}

/// Vector-valued polynomial f1(x) t1 + f2(x) t2.
struct VPoly {
  std::array<XPoly, 2> comp{};

  VPoly() = default;
  VPoly(XPoly f1, XPoly f2) : comp{std::move(f1), std::move(f2)} {}

  /// f t_{index+1}.
  static VPoly along(int index, XPoly f) {
    VPoly r;
    r.comp.at(static_cast<std::size_t>(index)) = std::move(f);
    return r;
  }

  const XPoly& operator[](int i) const { return comp[static_cast<std::size_t>(i)]; }
  XPoly& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return comp[0].is_zero() && comp[1].is_zero(); }

  /// Common total degree of all terms; -1 for zero; throws on mixed degrees.
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& f : comp)
      for (const auto& [m, c] : f.terms()) {
        if (d == -1) d = m.degree();
        else if (d != m.degree()) throw std::domain_error("VPoly: mixed degrees");
      }
    return d;
  }

  VPoly operator-() const { return {-comp[0], -comp[1]}; }
  VPoly& operator+=(const VPoly& o) { comp[0] += o.comp[0]; comp[1] += o.comp[1]; return *this; }
  VPoly& operator-=(const VPoly& o) { comp[0] -= o.comp[0]; comp[1] -= o.comp[1]; return *this; }
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  /// Scalar polynomial times vector polynomial.
  friend VPoly operator*(const XPoly& s, const VPoly& v) { return {s * v.comp[0], s * v.comp[1]}; }
  VPoly scaled(const ParamPoly& s) const { return {comp[0].scaled(s), comp[1].scaled(s)}; }

  friend bool operator==(const VPoly&, const VPoly&) = default;
};

/// Right multiplication of the value row vector by w: (f1, f2) w.
inline VPoly act_on_values(const VPoly& f, const GroupElement& w) {
  VPoly r;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      int e = w(i, j);
      if (e == 1) r[j] += f[i];
      else if (e == -1) r[j] -= f[i];
    }
  return r;
}

/// (w f)(x) = f(x w) w^{-1}.
inline VPoly group_act(const GroupElement& w, const VPoly& f) {
  VPoly moved{substitute(f[0], w), substitute(f[1], w)};
  return act_on_values(moved, w.inverse());
}

/// Scalar action (w f)(x) = f(x w).
inline XPoly group_act(const GroupElement& w, const XPoly& f) { return substitute(f, w); }

// Polynomials used throughout.

/// |x|^2 = x1^2 + x2^2.
inline XPoly norm_sq() { return x1() * x1() + x2() * x2(); }
/// phi = x1^2 - x2^2.
inline XPoly phi() { return x1() * x1() - x2() * x2(); }
/// p_{1,2} = -x2 t1 + x1 t2.
inline VPoly p12() { return {-x2(), x1()}; }
/// p_{1,4} = -x2 t1 - x1 t2.
inline VPoly p14() { return {-x2(), -x1()}; }

}  // namespace matweight

#endif  // MATWEIGHT_VPOLY_HPP
