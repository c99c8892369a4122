#pragma once

#include <map>

#include "diffnorm/algebra.hpp"

namespace diffnorm {

/// S^N * Q = sum_j C_j * P^(j) + Q~, with S the separant of P.
struct ReductionCertificate {
  DiffPoly remainder;
  int power = 0;
  std::map<int, DiffPoly> cofactors;
};

/// R = A * P + B * G with R free of `eliminated`.
struct ResultantCertificate {
  DiffPoly resultant;
  DiffPoly a;
  DiffPoly b;
  DerivVar eliminated;
};

/// Reduces the order of Q in y_i below or to the order of P in y_i.
/// Throws UndefinedSeparant when P does not involve y_i.
ReductionCertificate partial_reduce(const DiffPoly& q, const DiffPoly& p, int index);

/// Recomputes both sides of the certificate identity.
bool certificate_holds(const ReductionCertificate& cert, const DiffPoly& q, const DiffPoly& p, int index);

/// Sylvester resultant of P and G in v, with the rows of P first.
/// Throws BothConstantInV.
ResultantCertificate resultant_with_cofactors(const DiffPoly& p, const DiffPoly& g, const DerivVar& v);

/// Decides Q in [P] : S^inf for irreducible P.
bool saturation_membership(const DiffPoly& q, const DiffPoly& p, int index);

/// Rejects inputs that are visibly reducible as polynomials in their leader
/// y_i^(h): non-trivial content, or a repeated factor. Throws ReducibleInput.
void check_irreducibility_hints(const DiffPoly& p, int index);

struct TwoPolynomials {
  DiffPoly p;
  DiffPoly s;
  DiffPoly reduced;  // remainder of Q modulo P
  ResultantCertificate resultant;
};

/// Replaces (P_I, Q) by (P_I, res(P_I, S_P * Q~)) whose second entry has
/// lower order in y_i. Throws QInIdeal or ReducibleInput.
TwoPolynomials two_polynomials(const DiffPoly& p_i, const DiffPoly& q, int index);

}  // namespace diffnorm
