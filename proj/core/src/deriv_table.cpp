#include "diffnorm/deriv_table.hpp"

#include <string>

#include "diffnorm/error.hpp"

namespace diffnorm {

void DerivTable::set(const DerivVar& v, const Scalar& value) {
  const Order top = max_filled(v.index);
  const int next = top ? *top + 1 : 0;
  if (v.order > next)
    fail(ErrorCode::NotContiguous, "y" + std::to_string(v.index) + "^(" + std::to_string(v.order) +
                                       ") assigned before lower derivatives");
  values_.insert_or_assign(v, value);
  if (v.order == next) filled_[v.index] = next;
}

const Scalar& DerivTable::at(const DerivVar& v) const {
  auto it = values_.find(v);
  if (it == values_.end())
    fail(ErrorCode::UnassignedVariable,
         "no value for y" + std::to_string(v.index) + "^(" + std::to_string(v.order) + ")");
  return it->second;
}

Order DerivTable::max_filled(int index) const {
  auto it = filled_.find(index);
  if (it == filled_.end()) return std::nullopt;
  return it->second;
}

}  // namespace diffnorm
