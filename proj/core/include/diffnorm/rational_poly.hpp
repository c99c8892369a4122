#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace diffnorm {

/// Dense univariate polynomial over Q in the time symbol t, lowest degree
/// first. The coefficient vector never ends in a zero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  explicit RatPoly(const mpq_class& c);

  static RatPoly t();
  static RatPoly monomial(const mpq_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(int k) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const mpq_class& c) { return a *= c; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  RatPoly monic() const;
  RatPoly derivative() const;
  mpq_class operator()(const mpq_class& at) const;
  /// Polynomial composition this(inner).
  RatPoly compose(const RatPoly& inner) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  /// Degree first, then coefficients from the top.
  friend std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

/// Element of Q(t) kept as num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(mpq_class(1)) {}
  RatFunc(const RatPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(RatPoly num, RatPoly den);
  explicit RatFunc(const mpq_class& c) : RatFunc(RatPoly(c)) {}

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  /// d/dt with t' = 1.
  RatFunc derivative() const;
  /// Value at a rational point; throws DivisionByZero at a pole.
  mpq_class operator()(const mpq_class& at) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  void normalize();
  RatPoly num_;
  RatPoly den_;
};

}  // namespace diffnorm
