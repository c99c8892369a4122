#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace diffnorm {

/// Order of a differential polynomial in one indeterminate; nullopt is -inf.
/// std::optional's ordering already places nullopt below every integer.
using Order = std::optional<int>;

std::string to_string(Order o);

/// The derivative y_index^(order); indices are 1-based.
struct DerivVar {
  int index = 1;
  int order = 0;

  DerivVar next() const { return {index, order + 1}; }

  /// Storage order: derivative order first, then index.
  friend std::strong_ordering operator<=>(const DerivVar& a, const DerivVar& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.index <=> b.index;
  }
  friend bool operator==(const DerivVar&, const DerivVar&) = default;
};

/// Elimination ranking with one distinguished indeterminate ranked above all
/// others; ties broken by derivative order, then index.
struct Ranking {
  int distinguished = 1;

  bool less(const DerivVar& a, const DerivVar& b) const {
    const bool da = a.index == distinguished;
    const bool db = b.index == distinguished;
    if (da != db) return db;
    if (a.order != b.order) return a.order < b.order;
    return a.index < b.index;
  }
};

/// Power product of derivative variables. Exponents are positive; the empty
/// product is the unit monomial.
class Monomial {
 public:
  using Factor = std::pair<DerivVar, int>;

  Monomial() = default;
  explicit Monomial(DerivVar v, int exponent = 1);
  /// Factors may be unsorted or repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  bool is_unit() const { return factors_.empty(); }
  int degree() const { return degree_; }
  /// Sum of order * exponent.
  int weight() const { return weight_; }
  std::span<const Factor> factors() const { return factors_; }

  int exponent(const DerivVar& v) const;
  Monomial with_exponent(const DerivVar& v, int exponent) const;
  Monomial without(const DerivVar& v) const { return with_exponent(v, 0); }
  /// Splits into (factors of indeterminate `index`, everything else).
  std::pair<Monomial, Monomial> split_index(int index) const;

  Monomial operator*(const Monomial& o) const;
  /// Quotient when `o` divides this monomial.
  std::optional<Monomial> divide(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  void recompute();
  std::vector<Factor> factors_;
  int degree_ = 0;
  int weight_ = 0;
};

/// Deterministic total order on monomials: weight, then total degree, then
/// lexicographic on the sorted factor list.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace diffnorm
