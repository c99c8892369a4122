#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>

#include "diffnorm/rational_poly.hpp"

namespace diffnorm {

/// Coefficient domains. Values of different domains never combine
/// implicitly; promotion to Complex is an explicit call.
enum class Domain { Rational, RationalInT, Complex };

std::string to_string(Domain d);

inline constexpr double kDefaultTolerance = 1e-9;

/// Double-precision complex number carrying its own zero tolerance.
struct ComplexValue {
  std::complex<double> value;
  double tolerance = kDefaultTolerance;
};

/// Element of the coefficient domain: an exact rational, an element of Q(t)
/// (time mode, t' = 1), or a complex double compared against a tolerance.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(RatFunc f) : value_(std::move(f)) {}
  explicit Scalar(std::complex<double> z, double tolerance = kDefaultTolerance)
      : value_(ComplexValue{z, tolerance}) {}

  /// Integer n embedded in the given domain.
  static Scalar of(long n, Domain d, double tolerance = kDefaultTolerance);
  static Scalar zero(Domain d, double tolerance = kDefaultTolerance) { return of(0, d, tolerance); }
  static Scalar one(Domain d, double tolerance = kDefaultTolerance) { return of(1, d, tolerance); }

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;
  /// True when the value does not depend on t (always true outside time mode).
  bool is_constant() const;

  const mpq_class& rational() const;
  const RatFunc& rational_in_t() const;
  std::complex<double> complex() const;
  double tolerance() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar pow(unsigned e) const;
  Scalar inverse() const;

  /// Derivation of the coefficient domain: t' = 1 in time mode, zero otherwise.
  Scalar derivative() const;

  /// Exact equality for exact domains; |a - b| <= tolerance for Complex.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Explicit, one-way promotions.
  Scalar to_complex(double tolerance = kDefaultTolerance) const;
  Scalar to_time_mode() const;
  /// Promotes along Rational -> RationalInT and Rational -> Complex.
  Scalar to_domain(Domain d, double tolerance = kDefaultTolerance) const;

  std::string to_string() const;

 private:
  void require_same(const Scalar& o) const;
  std::variant<mpq_class, RatFunc, ComplexValue> value_;
};

mpq_class factorial(unsigned n);

}  // namespace diffnorm
