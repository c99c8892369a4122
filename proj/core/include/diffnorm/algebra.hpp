#pragma once

#include <map>
#include <optional>

#include "diffnorm/deriv_table.hpp"
#include "diffnorm/diff_poly.hpp"

namespace diffnorm {

/// Images of indeterminates under a differential substitution, keyed by index.
using Images = std::map<int, DiffPoly>;

/// Formal derivative; t' = 1 on RationalInT coefficients.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(const DiffPoly& p, int times);

inline Order order_wrt(const DiffPoly& p, int index) { return p.order_wrt(index); }

struct SeparantInitial {
  DiffPoly separant;
  DiffPoly initial;
  int order = 0;   // h
  int degree = 0;  // degree of p in y_i^(h)
};

/// Separant and initial of p with respect to indeterminate `index`.
/// Throws UndefinedSeparant when p does not involve it.
SeparantInitial separant_initial(const DiffPoly& p, int index);

/// Highest-ranked derivative variable of p; nullopt for constants.
std::optional<DerivVar> leader(const DiffPoly& p, const Ranking& ranking);

/// The differential homomorphism y_i^(j) -> derive^j(images[i]).
/// Throws MissingImage when p involves an index without an image.
DiffPoly substitute(const DiffPoly& p, const Images& images);

/// Identity images y_i -> y_i for i = 1..n.
Images identity_images(int n, Domain domain = Domain::Rational);

/// Non-differential substitution of individual derivative variables; variables
/// without an entry are left in place.
DiffPoly substitute_vars(const DiffPoly& p, const std::map<DerivVar, DiffPoly>& images);

/// Value of p at a point assignment. Throws UnassignedVariable.
Scalar evaluate(const DiffPoly& p, const DerivTable& g);

/// Quotient a / b treating derivative variables as independent commutative
/// variables; nullopt when b does not divide a.
std::optional<DiffPoly> exact_divide(const DiffPoly& a, const DiffPoly& b);

/// Greatest common divisor as commutative polynomials over the coefficient
/// field, normalized so the leading coefficient in MonomialOrder is one.
/// Not available for the Complex domain.
DiffPoly gcd(const DiffPoly& a, const DiffPoly& b);

/// gcd of the coefficients of p viewed as univariate in v.
DiffPoly content(const DiffPoly& p, const DerivVar& v);

/// Rational-domain copy of a polynomial whose coefficients do not involve t.
/// Throws TagMismatch otherwise.
DiffPoly to_rational(const DiffPoly& p);

/// Scales p so that its leading coefficient in MonomialOrder is one.
DiffPoly normalized(const DiffPoly& p);

/// Pseudo-remainder of a by b as univariate polynomials in v.
DiffPoly pseudo_remainder(const DiffPoly& a, const DiffPoly& b, const DerivVar& v);

}  // namespace diffnorm
