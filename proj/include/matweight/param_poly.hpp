#ifndef MATWEIGHT_PARAM_POLY_HPP
#define MATWEIGHT_PARAM_POLY_HPP

#include <cmath>
#include <sstream>
#include <string>

#include "matweight/bipoly.hpp"
#include "matweight/rational.hpp"

namespace matweight {

/// Polynomial in the multiplicity parameters k0, k1 with exact rational
/// coefficients (the ring Q[k0, k1]).
using ParamPoly = BiPoly<Rational>;

inline ParamPoly k0() { return ParamPoly::variable(0); }
inline ParamPoly k1() { return ParamPoly::variable(1); }

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline ParamPoly poch(const ParamPoly& a, unsigned n) {
  ParamPoly r(1);
  for (unsigned i = 0; i < n; ++i) r = r * (a + ParamPoly(Rational(static_cast<long>(i))));
  return r;
}

inline Rational poch(const Rational& a, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= a + Rational(static_cast<long>(i));
  return r;
}

inline double poch(double a, unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

/// Exact substitution k0 -> v0, k1 -> v1.
inline Rational poly_eval(const ParamPoly& p, const Rational& v0, const Rational& v1) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms())
    sum += c * pow(v0, static_cast<unsigned>(m.first)) * pow(v1, static_cast<unsigned>(m.second));
  return sum;
}

inline double poly_eval(const ParamPoly& p, double v0, double v1) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms())
    sum += c.to_double() * std::pow(v0, m.first) * std::pow(v1, m.second);
  return sum;
}

/// Human-readable form in graded-lex order, e.g. "1 + 2*k0 + 2*k1".
inline std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.first == 0 && m.second == 0;
    bool unit = mag == Rational(1);
    if (constant || !unit) os << mag;
    auto emit = [&](const char* name, int e, bool need_star) {
      if (e == 0) return need_star;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      return true;
    };
    bool star = !unit;
    star = emit("k0", m.first, star);
    emit("k1", m.second, star);
  }
  return os.str();
}

}  // namespace matweight

#endif  // MATWEIGHT_PARAM_POLY_HPP
