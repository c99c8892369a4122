#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffnorm/diff_poly.hpp"

namespace diffnorm {

/// Indeterminate names; names[i - 1] is the name of y_i. An empty list means
/// the default names y1, y2, ...
using NameList = std::vector<std::string>;

std::string variable_name(int index, const NameList& names);

/// Parses sums of products of rational literals, indeterminates with primes
/// (up to three) or x^(k) derivatives, ^ powers and parentheses. Division is
/// only by constants. In time mode `t` denotes the time variable and the
/// result lives in the RationalInT domain.
/// Throws ParseError (SyntaxError or NegativeDerivativeOrder).
DiffPoly parse_diffpoly(std::string_view text, const NameList& names = {}, bool time_mode = false);

/// Deterministic rendering, highest monomial first; parse_diffpoly inverts it.
std::string format_diffpoly(const DiffPoly& p, const NameList& names = {});

std::string format_var(const DerivVar& v, const NameList& names = {});

}  // namespace diffnorm
