#include "diffnorm/algebra.hpp"

#include <algorithm>
#include <vector>

#include "diffnorm/error.hpp"

namespace diffnorm {

DiffPoly derive(const DiffPoly& p) {
  DiffPoly out = p.zero_like();
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_constant()) out.add_term(m, c.derivative());
    for (const auto& [v, e] : m.factors()) {
      const Monomial lowered = m.with_exponent(v, e - 1);
      out.add_term(lowered * Monomial(v.next()), c * p.scalar(e));
    }
  }
  return out;
}

DiffPoly derive(const DiffPoly& p, int times) {
  if (times < 0) fail(ErrorCode::NegativeDerivativeOrder, "negative number of derivations");
  DiffPoly out = p;
  for (int k = 0; k < times; ++k) out = derive(out);
  return out;
}

SeparantInitial separant_initial(const DiffPoly& p, int index) {
  const Order h = p.order_wrt(index);
  if (!h) fail(ErrorCode::UndefinedSeparant, "polynomial does not involve y" + std::to_string(index));
  const DerivVar v{index, *h};
  SeparantInitial out{p.partial(v), p.coefficient(v, p.degree_in(v)), *h, p.degree_in(v)};
  return out;
}

std::optional<DerivVar> leader(const DiffPoly& p, const Ranking& ranking) {
  std::optional<DerivVar> best;
  for (const DerivVar& v : p.variables())
    if (!best || ranking.less(*best, v)) best = v;
  return best;
}

namespace {

// Caches derivatives and powers of the images while substituting.
class ImageCache {
 public:
  explicit ImageCache(const Images& images) : images_(images) {}

  const DiffPoly& power(const DerivVar& v, int e) {
    auto key = std::make_pair(v, e);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
    DiffPoly value = e == 1 ? derivative(v) : power(v, e - 1) * derivative(v);
    return powers_.emplace(key, std::move(value)).first->second;
  }

 private:
  const DiffPoly& derivative(const DerivVar& v) {
    auto& chain = derivs_[v.index];
    if (chain.empty()) {
      auto it = images_.find(v.index);
      if (it == images_.end()) fail(ErrorCode::MissingImage, "no image for y" + std::to_string(v.index));
      chain.push_back(it->second);
    }
    while (static_cast<int>(chain.size()) <= v.order) chain.push_back(derive(chain.back()));
    return chain[v.order];
  }

  const Images& images_;
  std::map<int, std::vector<DiffPoly>> derivs_;
  std::map<std::pair<DerivVar, int>, DiffPoly> powers_;
};

}  // namespace

DiffPoly substitute(const DiffPoly& p, const Images& images) {
  ImageCache cache(images);
  DiffPoly out = p.zero_like();
  for (const auto& [m, c] : p.terms()) {
    DiffPoly term = DiffPoly::constant(c);
    for (const auto& [v, e] : m.factors()) term *= cache.power(v, e);
    out += term;
  }
  return out;
}

Images identity_images(int n, Domain domain) {
  Images out;
  for (int i = 1; i <= n; ++i) out.emplace(i, DiffPoly::var(i, 0, domain));
  return out;
}

DiffPoly substitute_vars(const DiffPoly& p, const std::map<DerivVar, DiffPoly>& images) {
  DiffPoly out = p.zero_like();
  for (const auto& [m, c] : p.terms()) {
    DiffPoly term = DiffPoly::constant(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      if (auto it = images.find(v); it != images.end())
        term *= it->second.pow(static_cast<unsigned>(e));
      else
        kept.emplace_back(v, e);
    }
    if (!kept.empty()) term *= DiffPoly::term(Monomial::from_factors(std::move(kept)), p.scalar(1));
    out += term;
  }
  return out;
}

Scalar evaluate(const DiffPoly& p, const DerivTable& g) {
  Scalar sum = p.scalar(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar value = c;
    for (const auto& [v, e] : m.factors()) value *= g.at(v).pow(static_cast<unsigned>(e));
    sum += value;
  }
  return sum;
}

namespace {

DerivVar main_variable(const DiffPoly& p) { return p.variables().back(); }

DiffPoly power_of(const DerivVar& v, int k, const DiffPoly& like) {
  return DiffPoly::term(k == 0 ? Monomial() : Monomial(v, k), like.scalar(1));
}

}  // namespace

std::optional<DiffPoly> exact_divide(const DiffPoly& a, const DiffPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "exact division by zero polynomial");
  if (b.is_constant()) return a * b.constant_term().inverse();
  const DerivVar v = main_variable(b);
  const int m = b.degree_in(v);
  const DiffPoly lc = b.coefficient(v, m);
  DiffPoly q = a.zero_like();
  DiffPoly r = a;
  while (!r.is_zero()) {
    const int k = r.degree_in(v);
    if (k < m) return std::nullopt;
    auto t = exact_divide(r.coefficient(v, k), lc);
    if (!t) return std::nullopt;
    const DiffPoly step = *t * power_of(v, k - m, a);
    q += step;
    r -= step * b;
    if (!r.is_zero() && r.degree_in(v) >= k) return std::nullopt;
  }
  return q;
}

DiffPoly to_rational(const DiffPoly& p) {
  if (p.domain() == Domain::Rational) return p;
  if (p.domain() != Domain::RationalInT) fail(ErrorCode::TagMismatch, "complex polynomial has no rational form");
  DiffPoly out(Domain::Rational);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_constant()) fail(ErrorCode::TagMismatch, "coefficient depends on t");
    out.add_term(m, Scalar(c.rational_in_t().num().coeff(0)));
  }
  return out;
}

DiffPoly normalized(const DiffPoly& p) {
  if (p.is_zero()) return p;
  return p * p.terms().rbegin()->second.inverse();
}

DiffPoly pseudo_remainder(const DiffPoly& a, const DiffPoly& b, const DerivVar& v) {
  const int db = b.degree_in(v);
  const DiffPoly lcb = b.coefficient(v, db);
  DiffPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int k = r.degree_in(v);
    r = lcb * r - r.coefficient(v, k) * power_of(v, k - db, a) * b;
  }
  return r;
}

namespace {

DiffPoly primitive_part(const DiffPoly& p, const DerivVar& v) {
  return *exact_divide(p, content(p, v));
}

}  // namespace

DiffPoly content(const DiffPoly& p, const DerivVar& v) {
  DiffPoly g = p.zero_like();
  for (const DiffPoly& c : p.univariate_coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

DiffPoly gcd(const DiffPoly& a, const DiffPoly& b) {
  if (a.domain() == Domain::Complex)
    fail(ErrorCode::InvalidArgument, "gcd is not available over complex coefficients");
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return a.one_like();

  const DerivVar v = std::max(main_variable(a), main_variable(b));
  if (!a.involves(v)) return gcd(a, content(b, v));
  if (!b.involves(v)) return gcd(content(a, v), b);

  const DiffPoly ca = content(a, v);
  const DiffPoly cb = content(b, v);
  const DiffPoly c = gcd(ca, cb);
  DiffPoly pa = *exact_divide(a, ca);
  DiffPoly pb = *exact_divide(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    if (!pb.involves(v)) return c;
    const DiffPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) return normalized(c * pb);
    pa = std::move(pb);
    pb = r.involves(v) ? primitive_part(r, v) : r.one_like();
  }
}

}  // namespace diffnorm
