#include "diffnorm/series.hpp"

#include <algorithm>
#include <cmath>

#include "diffnorm/random.hpp"
#include "diffnorm/roots.hpp"

namespace diffnorm {

TruncSeries::TruncSeries(std::vector<Scalar> coeffs, Domain domain) : domain_(domain), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_)
    if (c.domain() != domain_) fail(ErrorCode::TagMismatch, "series coefficient in the wrong domain");
}

TruncSeries TruncSeries::zero(int truncation, Domain domain) {
  return TruncSeries(std::vector<Scalar>(static_cast<std::size_t>(truncation + 1), Scalar::zero(domain)), domain);
}

TruncSeries TruncSeries::constant(const Scalar& c, int truncation) {
  TruncSeries out = zero(truncation, c.domain());
  if (truncation >= 0) out.coeffs_[0] = c;
  return out;
}

TruncSeries TruncSeries::from_rationals(const std::vector<mpq_class>& coeffs, int truncation) {
  TruncSeries out = zero(truncation);
  for (std::size_t j = 0; j < coeffs.size() && static_cast<int>(j) <= truncation; ++j) out.coeffs_[j] = coeffs[j];
  return out;
}

TruncSeries TruncSeries::truncated(int truncation) const {
  TruncSeries out = *this;
  if (truncation < out.truncation()) out.coeffs_.resize(static_cast<std::size_t>(truncation + 1));
  return out;
}

int TruncSeries::valuation() const {
  for (int j = 0; j <= truncation(); ++j)
    if (!coeffs_[static_cast<std::size_t>(j)].is_zero()) return j;
  return truncation() + 1;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (Scalar& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int m = std::min(a.truncation(), b.truncation());
  TruncSeries out = a.truncated(m);
  for (int j = 0; j <= m; ++j) out.coeffs_[static_cast<std::size_t>(j)] += b[j];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.domain() != b.domain()) fail(ErrorCode::TagMismatch, "series in different domains");
  const int m = std::min(a.truncation(), b.truncation());
  TruncSeries out = TruncSeries::zero(m, a.domain());
  for (int i = 0; i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return out;
}

TruncSeries operator*(const Scalar& c, const TruncSeries& a) {
  TruncSeries out = a;
  for (Scalar& x : out.coeffs_) x = c * x;
  return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.domain_ == b.domain_ && a.coeffs_ == b.coeffs_;
}

TruncSeries TruncSeries::to_complex(double tolerance) const {
  std::vector<Scalar> c;
  for (const Scalar& x : coeffs_) c.push_back(x.to_complex(tolerance));
  return TruncSeries(std::move(c), Domain::Complex);
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_derive(const TruncSeries& a) {
  std::vector<Scalar> c;
  for (int j = 1; j <= a.truncation(); ++j) c.push_back(a[j] * Scalar::of(j, a.domain(), a[j].tolerance()));
  return TruncSeries(std::move(c), a.domain());
}

TruncSeries series_inverse(const TruncSeries& a) {
  if (a.truncation() < 0) return a;
  if (a[0].is_zero()) fail(ErrorCode::DivisionByZero, "series without constant term is not invertible");
  const Scalar inv0 = a[0].inverse();
  std::vector<Scalar> c{inv0};
  for (int j = 1; j <= a.truncation(); ++j) {
    Scalar sum = Scalar::zero(a.domain(), a[0].tolerance());
    for (int k = 1; k <= j; ++k) sum += a[k] * c[static_cast<std::size_t>(j - k)];
    c.push_back(-sum * inv0);
  }
  return TruncSeries(std::move(c), a.domain());
}

TruncSeries taylor_series(const std::vector<Scalar>& values) {
  if (values.empty()) return TruncSeries();
  const Domain dom = values.front().domain();
  std::vector<Scalar> c;
  for (std::size_t j = 0; j < values.size(); ++j)
    c.push_back(values[j] / Scalar(factorial(static_cast<unsigned>(j))).to_domain(dom, values[j].tolerance()));
  return TruncSeries(std::move(c), dom);
}

std::vector<Scalar> derivative_values_from_series(const TruncSeries& s) {
  std::vector<Scalar> out;
  for (int j = 0; j <= s.truncation(); ++j)
    out.push_back(s[j] * Scalar(factorial(static_cast<unsigned>(j))).to_domain(s.domain(), s[j].tolerance()));
  return out;
}

TruncSeries evaluate_on_series(const DiffPoly& p, const std::vector<TruncSeries>& tuple) {
  if (tuple.empty()) fail(ErrorCode::InvalidArgument, "empty series tuple");
  const Domain dom = tuple.front().domain();
  const DiffPoly q = p.domain() == dom ? p : p.to_complex(tuple.front().coeffs().empty() ? kDefaultTolerance : tuple.front()[0].tolerance());
  if (q.max_index() > static_cast<int>(tuple.size())) fail(ErrorCode::MissingImage, "series tuple too short");

  int m = 0;
  for (const auto& s : tuple) m = std::max(m, s.truncation());
  for (const DerivVar& v : q.variables()) m = std::min(m, tuple[static_cast<std::size_t>(v.index - 1)].truncation() - v.order);

  std::map<DerivVar, TruncSeries> derivs;
  for (const DerivVar& v : q.variables()) {
    TruncSeries s = tuple[static_cast<std::size_t>(v.index - 1)];
    for (int k = 0; k < v.order; ++k) s = series_derive(s);
    derivs.emplace(v, s.truncated(m));
  }
  TruncSeries sum = TruncSeries::zero(m, dom);
  for (const auto& [mono, c] : q.terms()) {
    TruncSeries term = TruncSeries::constant(c, m);
    for (const auto& [v, e] : mono.factors())
      for (int k = 0; k < e; ++k) term = term * derivs.at(v);
    sum = sum + term;
  }
  return sum;
}

std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

namespace {

// 0, 1, -1, 2, -2, ...
long sweep_value(int rank) { return rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2); }

// Tuples of sweep ranks ordered by their largest entry, then lexicographically.
std::vector<std::vector<long>> sweep_tuples(int length, int max_rank, std::size_t budget) {
  std::vector<std::vector<long>> out;
  if (length == 0) return {{}};
  for (int r = 0; r <= max_rank && out.size() < budget; ++r) {
    std::vector<int> ranks(static_cast<std::size_t>(length), 0);
    while (out.size() < budget) {
      if (*std::max_element(ranks.begin(), ranks.end()) == r) {
        std::vector<long> values;
        for (int k : ranks) values.push_back(sweep_value(k));
        out.push_back(std::move(values));
      }
      int pos = length - 1;
      while (pos >= 0 && ranks[static_cast<std::size_t>(pos)] == r) ranks[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++ranks[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

bool root_before(const Scalar& a, const Scalar& b) {
  if (a.domain() != Domain::Complex) {
    const mpq_class& x = a.rational();
    const mpq_class& y = b.rational();
    if (abs(x) != abs(y)) return abs(x) < abs(y);
    if ((x < 0) != (y < 0)) return y < 0;
    return x < y;
  }
  const auto x = a.complex();
  const auto y = b.complex();
  const double tol = a.tolerance() * (1 + std::max(std::abs(x), std::abs(y)));
  if (std::abs(std::abs(x) - std::abs(y)) > tol) return std::abs(x) < std::abs(y);
  const bool xn = x.real() < -tol;
  const bool yn = y.real() < -tol;
  if (xn != yn) return yn;
  if (std::abs(x.real() - y.real()) > tol) return x.real() < y.real();
  return x.imag() < y.imag() - tol;
}

std::vector<Scalar> leading_equation(const DiffPoly& p, const DerivVar& v, const DerivTable& g) {
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    Scalar value = c;
    for (const auto& [w, k] : m.factors())
      if (w != v) value *= g.at(w).pow(static_cast<unsigned>(k));
    if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e + 1), p.scalar(0));
    coeffs[static_cast<std::size_t>(e)] += value;
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

std::vector<Scalar> solve(const std::vector<Scalar>& coeffs, Backend backend, double tolerance) {
  std::vector<Scalar> roots;
  if (backend == Backend::Exact) {
    std::vector<mpq_class> q;
    for (const Scalar& c : coeffs) q.push_back(c.rational());
    for (const mpq_class& r : rational_roots(RatPoly(std::move(q)))) roots.emplace_back(r);
  } else {
    std::vector<std::complex<double>> z;
    for (const Scalar& c : coeffs) z.push_back(c.complex());
    for (const auto& r : complex_roots(z)) roots.emplace_back(r, tolerance);
  }
  std::stable_sort(roots.begin(), roots.end(), root_before);
  return roots;
}

}  // namespace

ExtensionReport extend_solution(const DiffPoly& p_in, const DiffPoly& guard_in, const std::vector<TruncSeries>& inputs_in,
                                int truncation, const ExtensionOptions& options) {
  const int d = static_cast<int>(inputs_in.size());
  const int top = d + 1;
  const Domain dom = options.backend == Backend::Exact ? Domain::Rational : Domain::Complex;
  const double tol = options.tolerance;
  if (p_in.domain() != Domain::Rational || guard_in.domain() != Domain::Rational)
    fail(ErrorCode::TagMismatch, "extend_solution expects rational coefficients");
  if (truncation < 0) fail(ErrorCode::InvalidArgument, "negative truncation");
  if (p_in.max_index() > top || guard_in.max_index() > top)
    fail(ErrorCode::InvalidArgument, "polynomial involves more indeterminates than inputs + 1");

  const DiffPoly p = dom == Domain::Complex ? p_in.to_complex(tol) : p_in;
  const DiffPoly guard = dom == Domain::Complex ? guard_in.to_complex(tol) : guard_in;
  const Order h_order = p.order_wrt(top);
  if (!h_order) fail(ErrorCode::PreconditionOrder, "P does not involve the distinguished indeterminate");
  const int h = *h_order;
  if (guard.order_wrt(top) >= h_order)
    fail(ErrorCode::PreconditionOrder, "the guard must have lower order than P in the distinguished indeterminate");

  std::vector<TruncSeries> inputs;
  DerivTable base;
  for (int i = 1; i <= d; ++i) {
    const TruncSeries& s = inputs_in[static_cast<std::size_t>(i - 1)];
    int need = truncation;
    if (const Order o = p.order_wrt(i)) need = std::max(need, truncation + *o - h);
    if (const Order o = guard.order_wrt(i)) need = std::max(need, *o);
    if (s.truncation() < need)
      fail(ErrorCode::PreconditionOrder, "input series " + std::to_string(i) + " needs truncation " + std::to_string(need));
    inputs.push_back(dom == Domain::Complex && s.domain() != Domain::Complex ? s.to_complex(tol) : s);
    const auto values = derivative_values_from_series(inputs.back());
    for (std::size_t j = 0; j < values.size(); ++j) base.set({i, static_cast<int>(j)}, values[j]);
  }

  const DerivVar lead{top, h};
  const DiffPoly separant = p.partial(lead);
  const int out_len = std::max(truncation, h);

  auto candidates = sweep_tuples(h, 4, static_cast<std::size_t>(std::max(1, options.max_candidates)));
  Rng rng(options.seed);
  while (h > 0 && static_cast<int>(candidates.size()) < options.max_candidates) {
    std::vector<long> values;
    for (int k = 0; k < h; ++k) values.push_back(uniform_int(rng, -10, 10));
    candidates.push_back(std::move(values));
  }

  int guard_passed = 0;
  int no_rational = 0;
  int inconsistent = 0;
  std::optional<Scalar> first_residual;
  int tried = 0;
  for (const auto& values : candidates) {
    ++tried;
    DerivTable g = base;
    std::vector<Scalar> free_values;
    for (int k = 0; k < h; ++k) {
      free_values.push_back(Scalar::of(values[static_cast<std::size_t>(k)], dom, tol));
      g.set({top, k}, free_values.back());
    }
    if (evaluate(guard, g).is_zero()) continue;
    ++guard_passed;

    const std::vector<Scalar> u = leading_equation(p, lead, g);
    if (u.empty()) continue;
    if (u.size() == 1) {
      ++inconsistent;
      if (!first_residual) first_residual = u.front();
      continue;
    }
    const std::vector<Scalar> roots = solve(u, options.backend, tol);
    if (roots.empty()) {
      ++no_rational;
      continue;
    }
    std::optional<Scalar> root;
    Scalar s_value;
    for (const Scalar& r : roots) {
      g.set(lead, r);
      s_value = evaluate(separant, g);
      if (!s_value.is_zero()) {
        root = r;
        break;
      }
    }
    if (!root) continue;

    DiffPoly current = p;
    for (int k = h + 1; k <= out_len; ++k) {
      current = derive(current);
      const DerivVar v{top, k};
      const DiffPoly rest = current.coefficient(v, 0);
      g.set(v, -evaluate(rest, g) / s_value);
    }
    std::vector<Scalar> out_values;
    for (int k = 0; k <= out_len; ++k) out_values.push_back(g.at({top, k}));

    ExtensionReport report;
    report.output = taylor_series(out_values).truncated(truncation);
    std::vector<TruncSeries> full = inputs;
    full.push_back(report.output);
    const TruncSeries residual = evaluate_on_series(p, full);
    report.residual_depth = residual.valuation() - 1;
    if (report.residual_depth < truncation - h)
      fail(ErrorCode::InvariantViolation, "residual does not vanish to the expected depth");
    for (const TruncSeries& s : inputs) report.tuple.push_back(s.truncated(truncation));
    report.tuple.push_back(report.output);
    report.free_values = std::move(free_values);
    report.root = *root;
    report.backend = options.backend;
    report.table = std::move(g);
    report.candidates_tried = tried;
    return report;
  }

  if (no_rational > 0) fail(ErrorCode::NoRationalRoot, "the leading equation has no rational root for any tried initial values");
  if (inconsistent > 0 && first_residual)
    throw InconsistentInitialCondition(*first_residual, "P at order 0 is the nonzero constant " + first_residual->to_string() +
                                                            " for every tried initial value");
  if (guard_passed == 0) fail(ErrorCode::GuardUnsatisfiable, "the guard vanishes for every tried initial value");
  fail(ErrorCode::GuardUnsatisfiable, "the separant vanishes at every root for the tried initial values");
}

}  // namespace diffnorm
