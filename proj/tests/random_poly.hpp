#ifndef MATWEIGHT_TESTS_RANDOM_POLY_HPP
#define MATWEIGHT_TESTS_RANDOM_POLY_HPP

#include <random>

#include "matweight/vpoly.hpp"

namespace testing_util {

using namespace matweight;

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Random ParamPoly of total degree <= max_degree with a few nonzero terms.
inline ParamPoly random_param_poly(std::mt19937_64& rng, int max_degree = 3, int terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  ParamPoly p;
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    int a = std::uniform_int_distribution<int>(0, d)(rng);
    p.add_term({a, d - a}, random_rational(rng));
  }
  return p;
}

inline XPoly random_xpoly(std::mt19937_64& rng, int degree, bool homogeneous, int terms = 3) {
  XPoly p;
  std::uniform_int_distribution<int> deg(0, degree);
  for (int t = 0; t < terms; ++t) {
    int d = homogeneous ? degree : deg(rng);
    int a = std::uniform_int_distribution<int>(0, d)(rng);
    p.add_term({a, d - a}, random_param_poly(rng, 1, 2));
  }
  return p;
}

inline VPoly random_vpoly(std::mt19937_64& rng, int degree, bool homogeneous = false) {
  return {random_xpoly(rng, degree, homogeneous), random_xpoly(rng, degree, homogeneous)};
}

}  // namespace testing_util

#endif
