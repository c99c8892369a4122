#include "diffnorm/monomial.hpp"

#include <algorithm>

namespace diffnorm {

std::string to_string(Order o) { return o ? std::to_string(*o) : std::string("-inf"); }

Monomial::Monomial(DerivVar v, int exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
  recompute();
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
  m.recompute();
  return m;
}

void Monomial::recompute() {
  degree_ = 0;
  weight_ = 0;
  for (const auto& [v, e] : factors_) {
    degree_ += e;
    weight_ += v.order * e;
  }
}

int Monomial::exponent(const DerivVar& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const DerivVar& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::with_exponent(const DerivVar& v, int exponent) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), v,
                             [](const Factor& f, const DerivVar& x) { return f.first < x; });
  if (it != m.factors_.end() && it->first == v) {
    if (exponent == 0) {
      m.factors_.erase(it);
    } else {
      it->second = exponent;
    }
  } else if (exponent != 0) {
    m.factors_.insert(it, Factor{v, exponent});
  }
  m.recompute();
  return m;
}

std::pair<Monomial, Monomial> Monomial::split_index(int index) const {
  Monomial in;
  Monomial out;
  for (const auto& f : factors_) (f.first.index == index ? in : out).factors_.push_back(f);
  in.recompute();
  out.recompute();
  return {in, out};
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + o.degree_;
  m.weight_ = weight_ + o.weight_;
  return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial m;
  auto a = factors_.begin();
  for (const auto& f : o.factors_) {
    while (a != factors_.end() && a->first < f.first) m.factors_.push_back(*a++);
    if (a == factors_.end() || !(a->first == f.first) || a->second < f.second) return std::nullopt;
    if (a->second > f.second) m.factors_.emplace_back(f.first, a->second - f.second);
    ++a;
  }
  while (a != factors_.end()) m.factors_.push_back(*a++);
  m.recompute();
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto fa = a.factors();
  auto fb = b.factors();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                      [](const Monomial::Factor& x, const Monomial::Factor& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

}  // namespace diffnorm
