#include "diffnorm/diff_poly.hpp"

#include <algorithm>
#include <set>

#include "diffnorm/error.hpp"

namespace diffnorm {

DiffPoly::DiffPoly(Domain domain, double tolerance) : domain_(domain), tolerance_(tolerance) {}

DiffPoly DiffPoly::constant(const Scalar& c) {
  DiffPoly p(c.domain(), c.domain() == Domain::Complex ? c.tolerance() : kDefaultTolerance);
  p.add_term(Monomial(), c);
  return p;
}

DiffPoly DiffPoly::constant(long c, Domain domain) { return constant(Scalar::of(c, domain)); }

DiffPoly DiffPoly::var(int index, int order, Domain domain) {
  if (index < 1) fail(ErrorCode::InvalidArgument, "indeterminate indices are 1-based");
  if (order < 0) fail(ErrorCode::NegativeDerivativeOrder, "negative derivative order");
  DiffPoly p(domain);
  p.add_term(Monomial(DerivVar{index, order}), Scalar::of(1, domain));
  return p;
}

DiffPoly DiffPoly::term(const Monomial& m, const Scalar& c) {
  DiffPoly p(c.domain(), c.domain() == Domain::Complex ? c.tolerance() : kDefaultTolerance);
  p.add_term(m, c);
  return p;
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar DiffPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? scalar(0) : it->second;
}

void DiffPoly::require_same(const DiffPoly& o) const {
  if (domain_ != o.domain_)
    fail(ErrorCode::TagMismatch,
         "mixing " + to_string(domain_) + " and " + to_string(o.domain_) + " polynomials");
}

void DiffPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.domain() != domain_)
    fail(ErrorCode::TagMismatch, "coefficient domain " + to_string(c.domain()) + " in a " +
                                     to_string(domain_) + " polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.require_same(b);
  DiffPoly r(a.domain_, a.tolerance_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
  *this = *this * o;
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Scalar& c) {
  if (c.domain() != domain_) fail(ErrorCode::TagMismatch, "scalar of a different domain");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly result = one_like();
  DiffPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  if (a.domain_ != b.domain_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

int DiffPoly::max_index() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) best = std::max(best, v.index);
  return best;
}

bool DiffPoly::involves_index(int index) const { return order_wrt(index).has_value(); }

bool DiffPoly::involves(const DerivVar& v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.exponent(v) > 0; });
}

std::vector<DerivVar> DiffPoly::variables() const {
  std::set<DerivVar> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Order DiffPoly::order_wrt(int index) const {
  Order best;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.index == index && (!best || v.order > *best)) best = v.order;
  return best;
}

Order DiffPoly::max_order() const {
  Order best;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (!best || v.order > *best) best = v.order;
  return best;
}

int DiffPoly::degree_in(const DerivVar& v) const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.exponent(v));
  return best;
}

int DiffPoly::total_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

int DiffPoly::degree_in_index(int index) const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.split_index(index).first.degree());
  return best;
}

DiffPoly DiffPoly::coefficient(const DerivVar& v, int k) const {
  DiffPoly r = zero_like();
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == k) r.terms_.emplace(m.without(v), c);
  return r;
}

std::vector<DiffPoly> DiffPoly::univariate_coefficients(const DerivVar& v) const {
  std::vector<DiffPoly> out(static_cast<std::size_t>(degree_in(v)) + 1, zero_like());
  for (const auto& [m, c] : terms_)
    out[static_cast<std::size_t>(m.exponent(v))].terms_.emplace(m.without(v), c);
  return out;
}

DiffPoly DiffPoly::partial(const DerivVar& v) const {
  DiffPoly r = zero_like();
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.with_exponent(v, e - 1), c * scalar(e));
  }
  return r;
}

DiffPoly DiffPoly::rename(const std::function<int(int)>& index_map) const {
  DiffPoly r = zero_like();
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : m.factors()) f.emplace_back(DerivVar{index_map(v.index), v.order}, e);
    r.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return r;
}

DiffPoly DiffPoly::to_complex(double tolerance) const {
  DiffPoly r(Domain::Complex, tolerance);
  for (const auto& [m, c] : terms_) r.add_term(m, c.to_complex(tolerance));
  return r;
}

DiffPoly DiffPoly::to_time_mode() const {
  DiffPoly r(Domain::RationalInT);
  for (const auto& [m, c] : terms_) r.add_term(m, c.to_time_mode());
  return r;
}

}  // namespace diffnorm
