#ifndef MATWEIGHT_RATIONAL_HPP
#define MATWEIGHT_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matweight {

/// Exact rational number backed by GMP. Always canonical: lowest terms,
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}                       // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}     // NOLINT(implicit)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : q_(z) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q", an integer, or a decimal with optional exponent
  /// ("0.3", "-1.25e-2"). Decimals are converted exactly.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  /// Nearest double (mpq_get_d truncates, so the neighbours are compared).
  double to_double() const {
    const double d = q_.get_d();
    if (!std::isfinite(d)) return d;
    double best = d;
    mpq_class best_err = abs(mpq_class(d) - q_);
    for (double cand : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
      if (!std::isfinite(cand)) continue;
      mpq_class err = abs(mpq_class(cand) - q_);
      if (err < best_err) {
        best_err = err;
        best = cand;
      }
    }
    return best;
  }
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

inline Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational or decimal number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num, den;
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
    if (ns.empty() || ds.empty() || num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0) return fail();
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(num, den);
  }

  // Decimal: [sign] digits [. digits] [(e|E) [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    ++i;
    std::string exp_text = s.substr(i);
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rational(mpz_class(mantissa * scale)) : Rational(mantissa, scale);
}

}  // namespace matweight

#endif  // MATWEIGHT_RATIONAL_HPP
