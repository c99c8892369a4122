#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffnorm/reduction.hpp"
#include "diffnorm/series.hpp"
#include "diffnorm/transforms.hpp"

namespace diffnorm {

/// A differential system in y_1..y_n whose first d indeterminates are
/// declared differentially independent. Either one equation with n = d + 1,
/// or one equation per dependent indeterminate (triangular presentation).
struct System {
  int n = 1;
  int d = 0;
  std::vector<DiffPoly> equations;
  std::optional<DiffPoly> inequation;
};

/// y_i = numerator / denominator with both sides in y_1..y_{d+1}.
struct DependentExpression {
  DiffPoly numerator;
  DiffPoly denominator;
};

struct PrimitiveSearchBounds {
  int degree_bound = 1;
  int prolongation_bound = 3;
  int max_candidates = 64;
};

struct PrimitiveElementResult {
  /// Old generators in terms of the new coordinates, where the new y_{d+1} is
  /// a_{d+1} + sum_i p_i(a_1) a_i.
  Automorphism renaming;
  DiffPoly p_i;
  std::map<int, DependentExpression> expressions;
  std::map<int, RatPoly> shifts;
  std::string method;
};

struct NormalizeParams {
  ShiftSearchParams shift;
  PrimitiveSearchBounds primitive;
};

/// Invertible change of variables together with the transformed pair. The
/// steps act on all n indeterminates and are applied left to right, so the
/// transformed polynomial is steps.back()(...steps.front()(P)).
struct ChangeOfVariables {
  int n = 1;
  int d = 0;
  Domain domain = Domain::Rational;
  std::vector<Automorphism> steps;
  /// steps.front() is the primitive-element renaming.
  bool has_renaming = false;
  /// Hypersurface input and inequation in the coordinates after the renaming.
  DiffPoly p_input;
  DiffPoly q_input;
  DiffPoly s;
  DiffPoly p_star;
  DiffPoly guard_star;
  /// Dependent indeterminates in the final coordinates.
  std::map<int, DependentExpression> dependents;

  /// Composite of all steps.
  Automorphism composed() const;
  /// Composite of the steps after the renaming.
  Automorphism normalizing() const;
};

/// Steps two and three: two_polynomials, the order-raising map and the
/// manageability shift. Throws NotDependent, QInIdeal, ExhaustedTrials.
ChangeOfVariables normalize_hypersurface(const DiffPoly& p_i, const DiffPoly& q_ineq, int d,
                                         const ShiftSearchParams& params = {});

/// Bounded search for a primitive element of a triangular system.
/// Throws BoundExceeded.
PrimitiveElementResult primitive_element_search(const System& system, const PrimitiveSearchBounds& bounds = {});

ChangeOfVariables normalize(const System& system, const NormalizeParams& params = {});

/// Throws InvariantViolation naming the first failed check.
void check_invariants(const ChangeOfVariables& cv);

/// p with y_i replaced by numerator_i / denominator_i (and derivatives by the
/// quotient rule), multiplied through by the smallest power product of
/// denominators that clears them.
DiffPoly substitute_fractions(const DiffPoly& p, const std::map<int, DependentExpression>& exprs);

/// Series of all n original indeterminates from series z_1..z_{d+1} of the
/// final coordinates.
std::vector<TruncSeries> pull_back(const ChangeOfVariables& cv, const std::vector<TruncSeries>& solution);

/// Exact backend first, complex doubles when no rational root exists.
ExtensionReport extend_with_fallback(const DiffPoly& p, const DiffPoly& guard, const std::vector<TruncSeries>& inputs,
                                     int truncation, ExtensionOptions options = {});

struct TimeExtension {
  Scalar lambda;
  ExtensionReport report;
  /// Solution series in s = t - lambda, without the time component.
  std::vector<TruncSeries> solution;
};

/// Time-mode extension: t becomes an extra input indeterminate T with series
/// lambda + s for the first lambda in 0, 1, -1, 2, ... that works.
/// Throws TimeComponentNotAffine and the extension errors of the last lambda.
TimeExtension extend_solution_time(const ChangeOfVariables& cv, const std::vector<TruncSeries>& inputs, int truncation,
                                   const ExtensionOptions& options = {}, int max_lambdas = 9);

struct SampleTrial {
  std::uint64_t seed = 0;
  std::vector<std::vector<mpq_class>> inputs;
  bool success = false;
  Backend backend = Backend::Exact;
  int residual_depth = -1;
  std::string error;
};

struct SampleReport {
  int trials = 0;
  int successes = 0;
  int truncation = 0;
  std::vector<SampleTrial> results;
};

/// Random polynomial inputs of degree <= 5 extended through the transformed
/// pair; failures are recorded, not thrown.
SampleReport verify_surjectivity_sample(const ChangeOfVariables& cv, int trials, int truncation, std::uint64_t seed,
                                        const ExtensionOptions& options = {});

}  // namespace diffnorm
