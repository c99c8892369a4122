#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffnorm/algebra.hpp"
#include "diffnorm/rational_poly.hpp"

namespace diffnorm {

/// Differential automorphism of k{y_1..y_n} given by the images of the
/// generators under the map and under its inverse.
struct Automorphism {
  Images forward;
  Images inverse;
  std::string tag;

  int size() const { return static_cast<int>(forward.size()); }
};

Automorphism identity_automorphism(int n, Domain domain = Domain::Rational);

/// a o b: b is applied first.
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism invert(const Automorphism& a);

/// The image of p; images are converted to p's domain when needed.
DiffPoly apply(const Automorphism& a, const DiffPoly& p);
DiffPoly apply_inverse(const Automorphism& a, const DiffPoly& p);

/// forward o inverse and inverse o forward fix every generator.
bool round_trip_holds(const Automorphism& a);

Images convert_images(const Images& images, Domain domain);

/// degree_bound caps the shift degree in make_manageable; 0 means N + ord Q.
struct ShiftSearchParams {
  int degree_bound = 0;
  int trials = 64;
  std::uint64_t seed = 1;
  int height_bound = 3;
  bool use_fallback = true;
};

/// Polynomials s_1..s_l in t of degree <= h such that P(s_1, .., s_l) is a
/// nonzero element of k(t). Random candidates come first; the deterministic
/// construction of the existence proof runs afterwards when enabled.
/// Throws ExhaustedTrials, PreconditionOrder (h too small) or InvalidArgument.
std::vector<RatPoly> find_poly_shift(const DiffPoly& p, int h, const ShiftSearchParams& params = {}, int count = 0);

/// P with x_i^(m) replaced by the m-th derivative of s_i(t).
RatFunc evaluate_shift(const DiffPoly& p, const std::vector<RatPoly>& shifts);

/// Some coefficient of Q, as a polynomial in the derivatives of y_i over the
/// other indeterminates, is a nonzero element of the coefficient field.
bool is_manageable(const DiffPoly& q, int index);

/// f1(y_{d+1}) = y_1 + y_{d+1}^(N), f1(y_1) = y_{d+1} with N one above the
/// largest order in P and S. Throws PreconditionOrder.
Automorphism make_high_order(const DiffPoly& p, const DiffPoly& s, int d);

/// f2(y_j) = y_j + p_j(y_i) for j != i turning Q into an i-manageable
/// polynomial; the identity when Q already is. `n` is the number of
/// indeterminates (at least the largest index of Q and i).
/// Throws ExhaustedTrials.
Automorphism make_manageable(const DiffPoly& q, int index, const ShiftSearchParams& params = {}, int n = 0);

}  // namespace diffnorm
