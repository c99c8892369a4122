#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffnorm/algebra.hpp"
#include "diffnorm/error.hpp"

namespace diffnorm {

/// c_0 + c_1 t + ... + c_M t^M, known modulo t^(M+1). M = -1 is the series
/// about which nothing is known.
class TruncSeries {
 public:
  explicit TruncSeries(Domain domain = Domain::Rational) : domain_(domain) {}
  TruncSeries(std::vector<Scalar> coeffs, Domain domain);

  static TruncSeries zero(int truncation, Domain domain = Domain::Rational);
  static TruncSeries constant(const Scalar& c, int truncation);
  /// Polynomial coefficients, padded with zeros (or cut) to the truncation.
  static TruncSeries from_rationals(const std::vector<mpq_class>& coeffs, int truncation);

  Domain domain() const { return domain_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

  TruncSeries truncated(int truncation) const;
  /// Lowest index with a nonzero coefficient, or truncation + 1 when none.
  int valuation() const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Scalar& c, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  TruncSeries to_complex(double tolerance = kDefaultTolerance) const;

 private:
  Domain domain_;
  std::vector<Scalar> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// d/dt; the truncation drops by one.
TruncSeries series_derive(const TruncSeries& a);
/// 1 / a; throws DivisionByZero when a has no constant term.
TruncSeries series_inverse(const TruncSeries& a);

/// c_j = v_j / j!.
TruncSeries taylor_series(const std::vector<Scalar>& values);
/// v_j = j! c_j.
std::vector<Scalar> derivative_values_from_series(const TruncSeries& s);

/// P evaluated on series f_1..f_n (tuple[i - 1] is f_i).
TruncSeries evaluate_on_series(const DiffPoly& p, const std::vector<TruncSeries>& tuple);

enum class Backend { Exact, Float };
std::string to_string(Backend b);

struct ExtensionOptions {
  std::uint64_t seed = 1;
  Backend backend = Backend::Exact;
  double tolerance = kDefaultTolerance;
  /// Budget of free-initial-value tuples; the deterministic sweep comes first.
  int max_candidates = 256;
};

struct ExtensionReport {
  TruncSeries output;
  /// Inputs followed by the output, all cut to the requested truncation.
  std::vector<TruncSeries> tuple;
  std::vector<Scalar> free_values;
  Scalar root;
  Backend backend = Backend::Exact;
  /// Coefficients 0..residual_depth of P on the tuple vanish.
  int residual_depth = -1;
  DerivTable table;
  int candidates_tried = 0;
};

/// Raised when the leading equation has no solution for any tried initial
/// values; residual() is P at order 0 for the first such attempt.
class InconsistentInitialCondition : public Error {
 public:
  InconsistentInitialCondition(Scalar residual, const std::string& what)
      : Error(ErrorCode::InconsistentInitialCondition, what), residual_(std::move(residual)) {}
  const Scalar& residual() const { return residual_; }

 private:
  Scalar residual_;
};

/// Extends input series f_1..f_d to a power-series solution f_{d+1} of P
/// through index M with the guard nonvanishing at t = 0. The distinguished
/// indeterminate is y_{d+1}, d = inputs.size().
/// Throws PreconditionOrder, GuardUnsatisfiable, NoRationalRoot,
/// InconsistentInitialCondition.
ExtensionReport extend_solution(const DiffPoly& p, const DiffPoly& guard, const std::vector<TruncSeries>& inputs,
                                int truncation, const ExtensionOptions& options = {});

}  // namespace diffnorm
