#include "diffnorm/transforms.hpp"

#include <algorithm>

#include "diffnorm/error.hpp"
#include "diffnorm/random.hpp"

namespace diffnorm {

Automorphism identity_automorphism(int n, Domain domain) {
  return {identity_images(n, domain), identity_images(n, domain), "id"};
}

Images convert_images(const Images& images, Domain domain) {
  Images out;
  for (const auto& [i, img] : images) {
    if (img.domain() == domain) {
      out.emplace(i, img);
    } else if (domain == Domain::RationalInT) {
      out.emplace(i, img.to_time_mode());
    } else if (domain == Domain::Complex) {
      out.emplace(i, img.to_complex());
    } else {
      fail(ErrorCode::TagMismatch, "cannot convert substitution images to the rational domain");
    }
  }
  return out;
}

DiffPoly apply(const Automorphism& a, const DiffPoly& p) {
  if (!a.forward.empty() && a.forward.begin()->second.domain() != p.domain())
    return substitute(p, convert_images(a.forward, p.domain()));
  return substitute(p, a.forward);
}

DiffPoly apply_inverse(const Automorphism& a, const DiffPoly& p) { return apply(invert(a), p); }

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out;
  for (const auto& [i, img] : b.forward) out.forward.emplace(i, apply(a, img));
  const Automorphism b_inv = invert(b);
  for (const auto& [i, img] : a.inverse) out.inverse.emplace(i, apply(b_inv, img));
  out.tag = a.tag == "id" ? b.tag : b.tag == "id" ? a.tag : a.tag + " o " + b.tag;
  return out;
}

Automorphism invert(const Automorphism& a) { return {a.inverse, a.forward, "inv(" + a.tag + ")"}; }

bool round_trip_holds(const Automorphism& a) {
  const Automorphism inv = invert(a);
  for (const auto& [i, img] : a.forward) {
    const DiffPoly y = DiffPoly::var(i, 0, img.domain());
    if (apply(a, apply(inv, y)) != y) return false;
    if (apply(inv, apply(a, y)) != y) return false;
  }
  return true;
}

namespace {

DiffPoly in_time_mode(const DiffPoly& p) {
  if (p.domain() == Domain::Complex) fail(ErrorCode::TagMismatch, "polynomial shifts need exact coefficients");
  return p.domain() == Domain::RationalInT ? p : p.to_time_mode();
}

RatPoly random_poly(Rng& rng, int degree, long height) {
  std::vector<mpq_class> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.emplace_back(uniform_int(rng, -height, height));
  return RatPoly(std::move(coeffs));
}

// Index of the symbolic coefficient a_{i,k} of s_i.
int coefficient_index(int i, int k, int h) { return (i - 1) * (h + 1) + k + 1; }

std::vector<RatPoly> proof_construction(const DiffPoly& pt, int h, int count) {
  std::map<DerivVar, DiffPoly> images;
  for (const DerivVar& v : pt.variables()) {
    DiffPoly img(Domain::RationalInT);
    for (int k = v.order; k <= h; ++k) {
      RatPoly tk = RatPoly::monomial(mpq_class(1), k);
      for (int m = 0; m < v.order; ++m) tk = tk.derivative();
      img += DiffPoly::var(coefficient_index(v.index, k, h), 0, Domain::RationalInT) * Scalar(RatFunc(tk));
    }
    images.emplace(v, std::move(img));
  }
  DiffPoly f = substitute_vars(pt, images);
  if (f.is_zero()) fail(ErrorCode::InvariantViolation, "generic polynomial shift vanishes");

  std::map<int, long> chosen;
  for (const DerivVar& a : f.variables()) {
    if (!f.involves(a)) continue;
    const int degree = f.degree_in(a);
    for (long value = 0; value <= degree; ++value) {
      DiffPoly specialized = substitute_vars(f, {{a, DiffPoly::constant(Scalar::of(value, Domain::RationalInT))}});
      if (!specialized.is_zero()) {
        chosen[a.index] = value;
        f = std::move(specialized);
        break;
      }
    }
  }
  std::vector<RatPoly> out;
  for (int i = 1; i <= count; ++i) {
    std::vector<mpq_class> coeffs;
    for (int k = 0; k <= h; ++k) {
      auto it = chosen.find(coefficient_index(i, k, h));
      coeffs.emplace_back(it == chosen.end() ? 0 : it->second);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

RatFunc evaluate_shift(const DiffPoly& p, const std::vector<RatPoly>& shifts) {
  const DiffPoly pt = in_time_mode(p);
  DerivTable g;
  for (int i = 1; i <= pt.max_index(); ++i) {
    const Order top = pt.order_wrt(i);
    if (!top) continue;
    if (i > static_cast<int>(shifts.size())) fail(ErrorCode::MissingImage, "no shift for indeterminate " + std::to_string(i));
    RatPoly s = shifts[static_cast<std::size_t>(i - 1)];
    for (int m = 0; m <= *top; ++m) {
      g.set({i, m}, Scalar(RatFunc(s)));
      s = s.derivative();
    }
  }
  return evaluate(pt, g).rational_in_t();
}

std::vector<RatPoly> find_poly_shift(const DiffPoly& p, int h, const ShiftSearchParams& params, int count) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "find_poly_shift needs a nonzero polynomial");
  if (h < 0 || p.max_order() > Order(h))
    fail(ErrorCode::PreconditionOrder, "degree bound below the order of the polynomial");
  count = std::max(count, p.max_index());
  const DiffPoly pt = in_time_mode(p);

  Rng rng(params.seed);
  for (int trial = 0; trial < params.trials; ++trial) {
    std::vector<RatPoly> shifts;
    for (int i = 0; i < count; ++i) shifts.push_back(random_poly(rng, h, params.height_bound));
    if (!evaluate_shift(pt, shifts).is_zero()) return shifts;
  }
  if (!params.use_fallback) fail(ErrorCode::ExhaustedTrials, "no nonvanishing polynomial shift found");
  return proof_construction(pt, h, count);
}

bool is_manageable(const DiffPoly& q, int index) {
  struct Group {
    int terms = 0;
    bool pure = false;
  };
  std::map<Monomial, Group, MonomialOrder> groups;
  for (const auto& [m, c] : q.terms()) {
    auto [own, rest] = m.split_index(index);
    Group& g = groups[own];
    ++g.terms;
    g.pure = rest.is_unit();
  }
  return std::any_of(groups.begin(), groups.end(),
                     [](const auto& entry) { return entry.second.terms == 1 && entry.second.pure; });
}

Automorphism make_high_order(const DiffPoly& p, const DiffPoly& s, int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "make_high_order needs d >= 1");
  const int top = d + 1;
  if (p.order_wrt(top) <= s.order_wrt(top))
    fail(ErrorCode::PreconditionOrder, "the order of P in the distinguished indeterminate must exceed that of S");
  const int big_n = std::max(p.max_order().value_or(-1), s.max_order().value_or(-1)) + 1;
  const int n = std::max({top, p.max_index(), s.max_index()});
  const Domain dom = p.domain();

  Automorphism f1 = identity_automorphism(n, dom);
  f1.forward.at(top) = DiffPoly::var(1, 0, dom) + DiffPoly::var(top, big_n, dom);
  f1.forward.at(1) = DiffPoly::var(top, 0, dom);
  f1.inverse.at(top) = DiffPoly::var(1, 0, dom);
  f1.inverse.at(1) = DiffPoly::var(top, 0, dom) - DiffPoly::var(1, big_n, dom);
  f1.tag = "f1(N=" + std::to_string(big_n) + ")";

  const DiffPoly p1 = apply(f1, p);
  const DiffPoly s1 = apply(f1, s);
  const Order lead = p1.order_wrt(top);
  bool ok = lead > s1.order_wrt(top);
  for (int j = 1; j <= d; ++j) ok = ok && lead > p1.order_wrt(j) && lead > s1.order_wrt(j);
  if (!ok) fail(ErrorCode::InvariantViolation, "order inequalities fail after the order-raising map");
  return f1;
}

namespace {

Automorphism shift_automorphism(const std::map<int, RatPoly>& shifts, int index, int n, Domain dom) {
  Automorphism f2 = identity_automorphism(n, dom);
  const DiffPoly y = DiffPoly::var(index, 0, dom);
  for (const auto& [j, poly] : shifts) {
    DiffPoly img(dom);
    for (int k = 0; k <= poly.degree(); ++k)
      if (poly.coeff(k) != 0) img += y.pow(static_cast<unsigned>(k)) * Scalar(poly.coeff(k)).to_domain(dom);
    f2.forward.at(j) += img;
    f2.inverse.at(j) -= img;
  }
  f2.tag = "f2";
  return f2;
}

}  // namespace

Automorphism make_manageable(const DiffPoly& q, int index, const ShiftSearchParams& params, int n) {
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "make_manageable needs a nonzero polynomial");
  n = std::max({n, q.max_index(), index});
  const Domain dom = q.domain();
  if (is_manageable(q, index)) {
    Automorphism id = identity_automorphism(n, dom);
    id.tag = "f2(identity)";
    return id;
  }

  int d2 = 0;
  for (const auto& [m, c] : q.terms()) d2 = std::max(d2, m.split_index(index).second.degree());
  const int ord_q = std::max(0, q.max_order().value_or(0));
  const int big_n = q.degree_in_index(index) + d2 * ord_q + 1;
  const int max_degree = params.degree_bound > 0 ? params.degree_bound : big_n + ord_q;

  Rng rng(params.seed);
  auto attempt = [&](const std::map<int, RatPoly>& shifts) -> std::optional<Automorphism> {
    Automorphism f2 = shift_automorphism(shifts, index, n, dom);
    if (is_manageable(apply(f2, q), index)) return f2;
    return std::nullopt;
  };

  const int random_per_degree = std::min(params.trials, 4);
  for (int e = 0; e <= max_degree; ++e) {
    for (int trial = 0; trial <= random_per_degree; ++trial) {
      std::map<int, RatPoly> shifts;
      for (int j = 1; j <= n; ++j) {
        if (j == index) continue;
        const long c = trial == 0 ? 1 : nonzero_int(rng, params.height_bound);
        shifts.emplace(j, RatPoly::monomial(mpq_class(c), e));
      }
      if (auto f2 = attempt(shifts)) return *f2;
    }
  }
  for (int trial = 0; trial < params.trials; ++trial) {
    std::map<int, RatPoly> shifts;
    for (int j = 1; j <= n; ++j)
      if (j != index) shifts.emplace(j, random_poly(rng, max_degree, params.height_bound));
    if (auto f2 = attempt(shifts)) return *f2;
  }
  fail(ErrorCode::ExhaustedTrials, "no manageable shift found within the search bounds");
}

}  // namespace diffnorm
