#ifndef MATWEIGHT_BIPOLY_HPP
#define MATWEIGHT_BIPOLY_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>

namespace matweight {

/// Exponent pair of a bivariate monomial y1^first * y2^second.
struct Monomial {
  int first = 0;
  int second = 0;

  int degree() const { return first + second; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: lower total degree first, then larger power
/// of the first variable first.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.first > b.first;
  }
};

/// Sparse polynomial in two commuting variables with coefficients in a
/// commutative ring `Coeff`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
///
/// `Coeff` must provide +, -, *, unary -, == and `is_zero()`, and be
/// constructible from an int.
template <class Coeff>
class BiPoly {
public:
  using Terms = std::map<Monomial, Coeff, GradedLex>;
  using coefficient_type = Coeff;

  BiPoly() = default;
  BiPoly(Coeff c) { add_term({0, 0}, std::move(c)); }  // NOLINT(implicit)
  BiPoly(int c) : BiPoly(Coeff(c)) {}                  // NOLINT(implicit)

  static BiPoly term(Monomial m, Coeff c) {
    BiPoly p;
    p.add_term(m, std::move(c));
    return p;
  }
  /// The generator y1 (index 0) or y2 (index 1).
  static BiPoly variable(int index) {
    if (index != 0 && index != 1) throw std::out_of_range("BiPoly::variable: index must be 0 or 1");
    return term(index == 0 ? Monomial{1, 0} : Monomial{0, 1}, Coeff(1));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Accumulates c into the coefficient of m; drops the entry if it cancels.
  void add_term(Monomial m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  /// True when every stored monomial has total degree d (the zero polynomial
  /// is homogeneous of every degree).
  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return r;
  }

  /// Multiplies every coefficient by s.
  BiPoly scaled(const Coeff& s) const {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

template <class Coeff>
BiPoly<Coeff> pow(const BiPoly<Coeff>& base, unsigned exponent) {
  BiPoly<Coeff> result(1);
  BiPoly<Coeff> b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace matweight

#endif  // MATWEIGHT_BIPOLY_HPP
