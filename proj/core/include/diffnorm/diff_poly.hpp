#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "diffnorm/monomial.hpp"
#include "diffnorm/scalar.hpp"

namespace diffnorm {

/// Sparse differential polynomial over one coefficient domain. Terms are
/// kept in MonomialOrder with no zero coefficients, so structural equality is
/// mathematical equality for the exact domains. The derivation is the
/// constants-only one, except in the RationalInT domain where t' = 1.
class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  explicit DiffPoly(Domain domain = Domain::Rational, double tolerance = kDefaultTolerance);

  static DiffPoly constant(const Scalar& c);
  static DiffPoly constant(long c, Domain domain = Domain::Rational);
  static DiffPoly var(int index, int order = 0, Domain domain = Domain::Rational);
  static DiffPoly var(DerivVar v, Domain domain = Domain::Rational) { return var(v.index, v.order, domain); }
  static DiffPoly term(const Monomial& m, const Scalar& c);

  Domain domain() const { return domain_; }
  double tolerance() const { return tolerance_; }
  bool is_time_mode() const { return domain_ == Domain::RationalInT; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Scalar constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Integer n in this polynomial's domain.
  Scalar scalar(long n) const { return Scalar::of(n, domain_, tolerance_); }
  DiffPoly zero_like() const { return DiffPoly(domain_, tolerance_); }
  DiffPoly one_like() const { return constant(scalar(1)); }

  void add_term(const Monomial& m, const Scalar& c);

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o);
  DiffPoly& operator*=(const Scalar& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Scalar& c) { return a *= c; }
  friend DiffPoly operator*(const Scalar& c, DiffPoly a) { return a *= c; }
  DiffPoly pow(unsigned e) const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

  /// Largest indeterminate index occurring, 0 for constants.
  int max_index() const;
  bool involves_index(int index) const;
  bool involves(const DerivVar& v) const;
  /// Sorted, duplicate-free list of occurring derivative variables.
  std::vector<DerivVar> variables() const;

  /// Largest j with y_index^(j) occurring, -inf otherwise.
  Order order_wrt(int index) const;
  /// Largest derivative order over all indeterminates, -inf for constants.
  Order max_order() const;
  int degree_in(const DerivVar& v) const;
  int total_degree() const;
  /// Total degree in the derivatives of one indeterminate.
  int degree_in_index(int index) const;

  /// Coefficient of v^k as a polynomial not involving v.
  DiffPoly coefficient(const DerivVar& v, int k) const;
  /// Entry k is the coefficient of v^k.
  std::vector<DiffPoly> univariate_coefficients(const DerivVar& v) const;
  DiffPoly partial(const DerivVar& v) const;

  /// Renames indeterminate indices; the mapping must be injective on the
  /// indices that occur.
  DiffPoly rename(const std::function<int(int)>& index_map) const;

  DiffPoly to_complex(double tolerance = kDefaultTolerance) const;
  DiffPoly to_time_mode() const;

 private:
  void require_same(const DiffPoly& o) const;

  Domain domain_;
  double tolerance_;
  TermMap terms_;
};

}  // namespace diffnorm
