#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "diffnorm/rational_poly.hpp"

namespace diffnorm {

/// All complex roots, with multiplicity, of the polynomial with coefficients
/// `coeffs` (lowest degree first). Aberth iteration followed by Newton polish.
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);

/// Distinct rational roots in increasing order.
std::vector<mpq_class> rational_roots(const RatPoly& p);

/// Rational of least denominator in [lo, hi].
mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi);

}  // namespace diffnorm
