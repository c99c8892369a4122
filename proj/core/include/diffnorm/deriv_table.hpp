#pragma once

#include <map>

#include "diffnorm/monomial.hpp"
#include "diffnorm/scalar.hpp"

namespace diffnorm {

/// Point assignment y_i^(j) -> value, i.e. a non-differential homomorphism to
/// the constants. Entries of one indeterminate are contiguous from order 0.
class DerivTable {
 public:
  /// Assigns or overwrites; throws NotContiguous when order j is set before j - 1.
  void set(const DerivVar& v, const Scalar& value);

  bool contains(const DerivVar& v) const { return values_.count(v) != 0; }
  /// Throws UnassignedVariable.
  const Scalar& at(const DerivVar& v) const;
  /// Highest filled order for the indeterminate, -inf if none.
  Order max_filled(int index) const;

  const std::map<DerivVar, Scalar>& values() const { return values_; }

 private:
  std::map<DerivVar, Scalar> values_;
  std::map<int, int> filled_;
};

}  // namespace diffnorm
