#include "oracle.hpp"

#include <stdexcept>

namespace diffnorm::oracle {

namespace {

Coeffs differentiate(const Coeffs& c) {
  Coeffs out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long>(k));
  return out;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b, int m) {
  Coeffs out(static_cast<std::size_t>(m + 1), mpq_class(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= m; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

mpq_class factorial(int k) {
  mpq_class f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

Coeffs evaluate(const DiffPoly& p, const std::vector<Coeffs>& series, int m) {
  Coeffs total(static_cast<std::size_t>(m + 1), mpq_class(0));
  for (const auto& [mono, c] : p.terms()) {
    Coeffs term{c.rational()};
    for (const auto& [v, e] : mono.factors()) {
      if (v.index < 1 || v.index > static_cast<int>(series.size())) throw std::out_of_range("oracle: missing series");
      Coeffs s = series[static_cast<std::size_t>(v.index - 1)];
      for (int j = 0; j < v.order; ++j) s = differentiate(s);
      for (int j = 0; j < e; ++j) term = multiply(term, s, m);
    }
    term.resize(static_cast<std::size_t>(m + 1), mpq_class(0));
    for (int k = 0; k <= m; ++k) total[static_cast<std::size_t>(k)] += term[static_cast<std::size_t>(k)];
  }
  return total;
}

std::optional<Coeffs> extend(const DiffPoly& p, const std::vector<Coeffs>& inputs, const Coeffs& head, int h,
                             int m) {
  Coeffs y = head;
  y.resize(static_cast<std::size_t>(m + 1), mpq_class(0));
  std::vector<Coeffs> tuple = inputs;
  tuple.push_back(y);
  if (evaluate(p, tuple, 0)[0] != 0) return std::nullopt;
  for (int k = h + 1; k <= m; ++k) {
    Coeffs& out = tuple.back();
    out[static_cast<std::size_t>(k)] = 0;
    const mpq_class v0 = evaluate(p, tuple, k - h)[static_cast<std::size_t>(k - h)];
    out[static_cast<std::size_t>(k)] = 1;
    const mpq_class v1 = evaluate(p, tuple, k - h)[static_cast<std::size_t>(k - h)];
    if (v1 == v0) return std::nullopt;
    out[static_cast<std::size_t>(k)] = -v0 / (v1 - v0);
  }
  return tuple.back();
}

Coeffs binomial_series(const mpq_class& a, const mpq_class& r, int m) {
  Coeffs out;
  mpq_class c(1);
  for (int k = 0; k <= m; ++k) {
    out.push_back(c);
    c = c * (r - k) / (k + 1) * a;
  }
  return out;
}

}  // namespace diffnorm::oracle
