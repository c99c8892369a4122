#pragma once

#include <vector>

#include "diffnorm/diff_poly.hpp"
#include "diffnorm/random.hpp"

namespace diffnorm::gen {

struct PolyShape {
  int indeterminates = 2;
  int max_order = 2;
  int max_degree = 2;
  int max_terms = 4;
  long coeff_bound = 5;
  bool fractions = false;
};

mpq_class random_rational(Rng& rng, long num_bound, long den_bound);

DiffPoly random_monomial_poly(Rng& rng, const PolyShape& shape);

/// Sum of up to max_terms random terms; may be zero.
DiffPoly random_poly(Rng& rng, const PolyShape& shape);

/// Nonzero and involving y_index.
DiffPoly random_poly_involving(Rng& rng, const PolyShape& shape, int index);

std::vector<mpq_class> random_coeffs(Rng& rng, int count, long num_bound, long den_bound);

}  // namespace diffnorm::gen
