#ifndef MATWEIGHT_MATWEIGHT_HPP
#define MATWEIGHT_MATWEIGHT_HPP

#include "matweight/rational.hpp"
#include "matweight/bipoly.hpp"
#include "matweight/param_poly.hpp"
#include "matweight/vpoly.hpp"
#include "matweight/dunkl.hpp"
#include "matweight/sums.hpp"
#include "matweight/gamma.hpp"
#include "matweight/hypergeometric.hpp"
#include "matweight/weight.hpp"
#include "matweight/quadrature.hpp"
#include "matweight/sector.hpp"
#include "matweight/report.hpp"
#include "matweight/suites.hpp"

#endif  // MATWEIGHT_MATWEIGHT_HPP
