#include "diffnorm/pipeline.hpp"

#include <algorithm>
#include <exception>

#include "diffnorm/random.hpp"

namespace diffnorm {

namespace {

Automorphism extended(Automorphism a, int n) {
  const Domain dom = a.forward.empty() ? Domain::Rational : a.forward.begin()->second.domain();
  for (int i = 1; i <= n; ++i) {
    a.forward.try_emplace(i, DiffPoly::var(i, 0, dom));
    a.inverse.try_emplace(i, DiffPoly::var(i, 0, dom));
  }
  return a;
}

Automorphism compose_all(const std::vector<Automorphism>& steps, std::size_t first, int n, Domain dom) {
  Automorphism out = identity_automorphism(n, dom);
  for (std::size_t k = first; k < steps.size(); ++k) out = compose(steps[k], out);
  return out;
}

DiffPoly in_domain(const DiffPoly& p, Domain dom) {
  if (p.domain() == dom) return p;
  if (dom == Domain::RationalInT) return p.to_time_mode();
  if (dom == Domain::Complex) return p.to_complex();
  return to_rational(p);
}

}  // namespace

Automorphism ChangeOfVariables::composed() const { return compose_all(steps, 0, n, domain); }

Automorphism ChangeOfVariables::normalizing() const { return compose_all(steps, has_renaming ? 1 : 0, n, domain); }

void check_invariants(const ChangeOfVariables& cv) {
  const int top = cv.d + 1;
  for (const Automorphism& a : cv.steps)
    if (!round_trip_holds(a)) fail(ErrorCode::InvariantViolation, "step " + a.tag + " is not inverted by its inverse images");
  if (cv.p_star.order_wrt(top) <= cv.guard_star.order_wrt(top))
    fail(ErrorCode::InvariantViolation, "transformed guard does not have lower order than the transformed polynomial");
  if (!is_manageable(cv.guard_star, top)) fail(ErrorCode::InvariantViolation, "transformed guard is not manageable");
  if (apply(cv.normalizing(), cv.p_input) != cv.p_star)
    fail(ErrorCode::InvariantViolation, "transformed polynomial differs from the composed substitution");
  if (cv.steps.size() < 2) return;
  const Automorphism& f1 = cv.steps[cv.steps.size() - 2];
  const Automorphism& f2 = cv.steps.back();
  const DiffPoly p1 = apply_inverse(f2, cv.p_star);
  const SeparantInitial si = separant_initial(p1, top);
  const DiffPoly r = resultant_with_cofactors(p1, si.separant, {top, si.order}).resultant;
  if (apply(f2, si.initial * r * apply(f1, cv.s)) != cv.guard_star)
    fail(ErrorCode::InvariantViolation, "transformed guard differs from the image of I * R * S");
}

ChangeOfVariables normalize_hypersurface(const DiffPoly& p_i, const DiffPoly& q_ineq, int d, const ShiftSearchParams& params) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  const int top = d + 1;
  if (p_i.max_index() > top || q_ineq.max_index() > top)
    fail(ErrorCode::InvalidArgument, "hypersurface input must only involve y1..y" + std::to_string(top));
  if (!p_i.involves_index(top)) fail(ErrorCode::NotDependent, "P does not involve y" + std::to_string(top));
  const Domain dom = p_i.domain();
  const DiffPoly q = in_domain(q_ineq, dom);

  const TwoPolynomials tp = two_polynomials(p_i, q, top);
  const Automorphism f1 = d >= 1 ? make_high_order(tp.p, tp.s, d) : identity_automorphism(top, dom);
  const DiffPoly p1 = apply(f1, tp.p);
  const DiffPoly s1 = apply(f1, tp.s);
  const SeparantInitial si = separant_initial(p1, top);
  const DiffPoly r = resultant_with_cofactors(p1, si.separant, {top, si.order}).resultant;
  if (r.is_zero()) fail(ErrorCode::ReducibleInput, "transformed polynomial shares a factor with its separant");
  const DiffPoly guard = si.initial * r * s1;
  const Automorphism f2 = make_manageable(guard, top, params, top);

  ChangeOfVariables cv;
  cv.n = top;
  cv.d = d;
  cv.domain = dom;
  cv.steps = {f1, f2};
  cv.p_input = p_i;
  cv.q_input = q;
  cv.s = tp.s;
  cv.p_star = apply(f2, p1);
  cv.guard_star = apply(f2, guard);
  check_invariants(cv);
  return cv;
}

DiffPoly substitute_fractions(const DiffPoly& p, const std::map<int, DependentExpression>& exprs) {
  std::map<DerivVar, DiffPoly> numerators;
  // Numerator of the m-th derivative over denominator^(m+1), by the quotient rule.
  auto numerator = [&](const DerivVar& v) -> const DiffPoly& {
    const DependentExpression& e = exprs.at(v.index);
    for (int m = 0; m <= v.order; ++m) {
      const DerivVar w{v.index, m};
      if (numerators.count(w)) continue;
      if (m == 0) {
        numerators.emplace(w, e.numerator);
        continue;
      }
      const DiffPoly& lower = numerators.at({v.index, m - 1});
      numerators.emplace(w, derive(lower) * e.denominator - lower * derive(e.denominator) * e.denominator.scalar(m));
    }
    return numerators.at(v);
  };

  std::map<int, int> needed;
  for (const auto& [m, c] : p.terms()) {
    std::map<int, int> used;
    for (const auto& [v, e] : m.factors())
      if (exprs.count(v.index)) used[v.index] += (v.order + 1) * e;
    for (const auto& [i, k] : used) needed[i] = std::max(needed[i], k);
  }
  DiffPoly out = p.zero_like();
  for (const auto& [m, c] : p.terms()) {
    DiffPoly term = DiffPoly::constant(c);
    std::map<int, int> used;
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      if (exprs.count(v.index)) {
        term *= numerator(v).pow(static_cast<unsigned>(e));
        used[v.index] += (v.order + 1) * e;
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (!kept.empty()) term *= DiffPoly::term(Monomial::from_factors(std::move(kept)), p.scalar(1));
    for (const auto& [i, k] : needed) term *= exprs.at(i).denominator.pow(static_cast<unsigned>(k - used[i]));
    out += term;
  }
  return out;
}

namespace {

DiffPoly shift_poly(const RatPoly& poly, const DiffPoly& y) {
  DiffPoly out = y.zero_like();
  for (int k = 0; k <= poly.degree(); ++k)
    if (poly.coeff(k) != 0) out += y.pow(static_cast<unsigned>(k)) * Scalar(poly.coeff(k)).to_domain(y.domain());
  return out;
}

// Eliminates a_n, .., a_{top} from `lin` with the order-zero relations.
DiffPoly norm(const std::map<int, DiffPoly>& reduced, DiffPoly lin) {
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    const DerivVar v{it->first, 0};
    if (!lin.involves(v)) {
      lin = lin.pow(static_cast<unsigned>(it->second.degree_in(v)));
      continue;
    }
    lin = resultant_with_cofactors(it->second, lin, v).resultant;
  }
  return lin;
}

bool verify_expressions(const System& system, const Automorphism& renaming, const DiffPoly& p_i,
                        const std::map<int, DependentExpression>& exprs) {
  const int top = system.d + 1;
  for (const auto& [i, e] : exprs)
    if (saturation_membership(e.denominator, p_i, top)) return false;
  for (const DiffPoly& eq : system.equations) {
    const DiffPoly num = substitute_fractions(apply(renaming, eq), exprs);
    if (!saturation_membership(num, p_i, top)) return false;
  }
  return true;
}

int dependent_order(const DiffPoly& p, int top, int n) {
  int worst = 0;
  for (const DerivVar& v : p.variables())
    if (v.index >= top && v.index <= n) worst = std::max(worst, v.order);
  return worst;
}

// Coefficient rank tuples ordered by largest rank, then lexicographically.
std::vector<std::vector<int>> rank_tuples(int length, int max_rank, std::size_t budget) {
  std::vector<std::vector<int>> out;
  if (length == 0) return {{}};
  for (int r = 0; r <= max_rank && out.size() < budget; ++r) {
    std::vector<int> ranks(static_cast<std::size_t>(length), 0);
    while (out.size() < budget) {
      if (*std::max_element(ranks.begin(), ranks.end()) == r) out.push_back(ranks);
      int pos = length - 1;
      while (pos >= 0 && ranks[static_cast<std::size_t>(pos)] == r) ranks[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++ranks[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

long rank_value(int rank) { return rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2); }

}  // namespace

PrimitiveElementResult primitive_element_search(const System& system, const PrimitiveSearchBounds& bounds) {
  const int n = system.n;
  const int d = system.d;
  const int top = d + 1;
  if (d < 0 || top > n) fail(ErrorCode::InvalidArgument, "dimension must be below the number of indeterminates");
  if (static_cast<int>(system.equations.size()) != n - d)
    fail(ErrorCode::InvalidArgument, "expected one equation per dependent indeterminate");
  const Domain dom = system.equations.front().domain();

  std::map<int, DiffPoly> relation;
  for (const DiffPoly& eq : system.equations) {
    const int j = eq.max_index();
    if (j < top || j > n || relation.count(j))
      fail(ErrorCode::InvalidArgument, "equations must form a triangular presentation, one per dependent indeterminate");
    relation.emplace(j, eq);
  }

  PrimitiveElementResult result;
  result.renaming = identity_automorphism(n, dom);
  if (n == top) {
    result.p_i = relation.at(top);
    result.method = "identity";
    return result;
  }

  // Algebraic case: every relation has order zero in its own indeterminate
  // once derivatives of earlier dependent indeterminates are eliminated.
  std::map<int, DiffPoly> reduced;
  bool algebraic = true;
  for (const auto& [j, eq] : relation) {
    DiffPoly r = eq;
    for (int k = j - 1; k >= top; --k) {
      if (r.order_wrt(k).value_or(0) <= 0) continue;
      if (*r.order_wrt(k) > bounds.prolongation_bound)
        fail(ErrorCode::BoundExceeded, "prolongation bound exceeded while eliminating derivatives");
      r = partial_reduce(r, reduced.at(k), k).remainder;
    }
    if (r.order_wrt(j) != Order(0)) {
      algebraic = false;
      break;
    }
    reduced.emplace(j, std::move(r));
  }

  if (algebraic) {
    const int b_index = n + 1;
    const int eps_index = n + 2;
    const DiffPoly b = DiffPoly::var(b_index, 0, dom);
    const DiffPoly eps = DiffPoly::var(eps_index, 0, dom);
    const int degree = d >= 1 ? bounds.degree_bound : 0;
    const int others = n - top;
    const auto tuples = rank_tuples(others * (degree + 1), 4, static_cast<std::size_t>(std::max(1, bounds.max_candidates)));
    for (const auto& ranks : tuples) {
      std::map<int, RatPoly> shifts;
      DiffPoly lin0 = b - DiffPoly::var(top, 0, dom);
      DiffPoly moved(dom);
      for (int i = top + 1; i <= n; ++i) {
        std::vector<mpq_class> c;
        for (int k = 0; k <= degree; ++k)
          c.emplace_back(rank_value(ranks[static_cast<std::size_t>((i - top - 1) * (degree + 1) + k)]));
        RatPoly poly(std::move(c));
        if (!poly.is_zero()) moved += shift_poly(poly, DiffPoly::var(1, 0, dom)) * DiffPoly::var(i, 0, dom);
        shifts.emplace(i, std::move(poly));
      }
      lin0 -= moved;
      const DiffPoly n0 = norm(reduced, lin0);
      const DerivVar bv{b_index, 0};
      if (!n0.involves(bv)) continue;
      if (n0.degree_in(bv) >= 2 && resultant_with_cofactors(n0, n0.partial(bv), bv).resultant.is_zero()) continue;

      auto rename = [&](const DiffPoly& p) { return p.rename([&](int i) { return i == b_index ? top : i; }); };
      // a_i = -dN/d(eps) / dN/dB at eps = 0, N the norm of B - b - eps * a_i.
      const DerivVar ev{eps_index, 0};
      const std::map<DerivVar, DiffPoly> at_zero{{ev, DiffPoly::constant(0, dom)}};
      std::map<int, DependentExpression> exprs;
      for (int i = top + 1; i <= n; ++i) {
        const DiffPoly ni = norm(reduced, lin0 - eps * DiffPoly::var(i, 0, dom));
        DiffPoly t = -substitute_vars(ni.partial(ev), at_zero);
        DiffPoly q = substitute_vars(ni, at_zero).partial(bv);
        if (q.is_zero()) break;
        const DiffPoly g = t.is_zero() ? normalized(q) : gcd(t, q);
        t = *exact_divide(t, g);
        q = *exact_divide(q, g);
        const Scalar scale = q.terms().rbegin()->second.inverse();
        exprs.emplace(i, DependentExpression{rename(t * scale), rename(q * scale)});
      }
      if (static_cast<int>(exprs.size()) != others) continue;
      const DiffPoly p_i = rename(*exact_divide(n0, content(n0, bv)));

      Automorphism renaming = identity_automorphism(n, dom);
      renaming.forward.at(top) -= moved;
      renaming.inverse.at(top) += moved;
      renaming.tag = "primitive";
      if (!verify_expressions(system, renaming, p_i, exprs)) continue;
      result.renaming = std::move(renaming);
      result.p_i = p_i;
      result.expressions = std::move(exprs);
      result.shifts = std::move(shifts);
      result.method = "algebraic";
      return result;
    }
    fail(ErrorCode::BoundExceeded, "no primitive element verified within the candidate bound");
  }

  // Back-substitution: y_{d+1} itself is primitive and every later relation
  // is linear of order zero in its own indeterminate.
  const DiffPoly& p_i = relation.at(top);
  std::map<int, DependentExpression> exprs;
  for (int i = top + 1; i <= n; ++i) {
    if (dependent_order(relation.at(i), top + 1, i - 1) > bounds.prolongation_bound)
      fail(ErrorCode::BoundExceeded, "prolongation bound exceeded during back-substitution");
    const DiffPoly r = substitute_fractions(relation.at(i), exprs);
    const DerivVar v{i, 0};
    if (r.order_wrt(i) != Order(0) || r.degree_in(v) != 1)
      fail(ErrorCode::BoundExceeded, "relation for y" + std::to_string(i) + " is outside the supported classes");
    exprs.emplace(i, DependentExpression{-r.coefficient(v, 0), r.coefficient(v, 1)});
  }
  if (!verify_expressions(system, result.renaming, p_i, exprs))
    fail(ErrorCode::BoundExceeded, "back-substituted expressions could not be verified");
  result.p_i = p_i;
  result.expressions = std::move(exprs);
  result.method = "back-substitution";
  return result;
}

ChangeOfVariables normalize(const System& system, const NormalizeParams& params) {
  if (system.equations.empty()) fail(ErrorCode::InvalidArgument, "system without equations");
  const Domain dom = system.equations.front().domain();
  const DiffPoly one = DiffPoly::constant(1, dom);
  const int top = system.d + 1;
  if (system.n == top) {
    if (system.equations.size() != 1) fail(ErrorCode::InvalidArgument, "hypersurface input needs exactly one equation");
    return normalize_hypersurface(system.equations.front(), system.inequation.value_or(one), system.d, params.shift);
  }

  const PrimitiveElementResult pe = primitive_element_search(system, params.primitive);
  DiffPoly ineq = system.inequation ? substitute_fractions(apply(pe.renaming, in_domain(*system.inequation, dom)), pe.expressions) : one;
  std::vector<DiffPoly> seen;
  for (const auto& [i, e] : pe.expressions) {
    if (std::find(seen.begin(), seen.end(), e.denominator) != seen.end()) continue;
    seen.push_back(e.denominator);
    ineq *= e.denominator;
  }
  const ChangeOfVariables hyper = normalize_hypersurface(pe.p_i, ineq, system.d, params.shift);

  ChangeOfVariables cv = hyper;
  cv.n = system.n;
  cv.steps = {extended(pe.renaming, system.n)};
  for (const Automorphism& a : hyper.steps) cv.steps.push_back(extended(a, system.n));
  cv.has_renaming = true;
  const Automorphism f = hyper.normalizing();
  for (const auto& [i, e] : pe.expressions)
    cv.dependents.emplace(i, DependentExpression{apply(f, e.numerator), apply(f, e.denominator)});
  check_invariants(cv);
  return cv;
}

std::vector<TruncSeries> pull_back(const ChangeOfVariables& cv, const std::vector<TruncSeries>& solution) {
  if (static_cast<int>(solution.size()) != cv.d + 1) fail(ErrorCode::InvalidArgument, "expected d + 1 solution series");
  auto prepared = [&](const DiffPoly& p) {
    if (solution.front().domain() == Domain::Complex) return p.domain() == Domain::Complex ? p : to_rational(p).to_complex();
    return to_rational(p);
  };
  std::vector<TruncSeries> full = solution;
  for (int i = cv.d + 2; i <= cv.n; ++i) {
    const DependentExpression& e = cv.dependents.at(i);
    full.push_back(evaluate_on_series(prepared(e.numerator), solution) *
                   series_inverse(evaluate_on_series(prepared(e.denominator), solution)));
  }
  const Automorphism f = cv.composed();
  std::vector<TruncSeries> out;
  for (int i = 1; i <= cv.n; ++i) out.push_back(evaluate_on_series(prepared(f.forward.at(i)), full));
  return out;
}

ExtensionReport extend_with_fallback(const DiffPoly& p, const DiffPoly& guard, const std::vector<TruncSeries>& inputs,
                                     int truncation, ExtensionOptions options) {
  if (options.backend == Backend::Float) return extend_solution(p, guard, inputs, truncation, options);
  try {
    return extend_solution(p, guard, inputs, truncation, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoRationalRoot) throw;
  }
  options.backend = Backend::Float;
  return extend_solution(p, guard, inputs, truncation, options);
}

namespace {

RatPoly lcm(const RatPoly& a, const RatPoly& b) { return (a * b).divmod(gcd(a, b)).first.monic(); }

// Clears the t-denominators of p and turns t into the indeterminate y_t,
// moving y_t and above up by one.
std::pair<DiffPoly, RatPoly> adjoin_time(const DiffPoly& p, int t_index) {
  RatPoly l(mpq_class(1));
  if (p.domain() == Domain::RationalInT)
    for (const auto& [m, c] : p.terms()) l = lcm(l, c.rational_in_t().den());
  const DiffPoly moved = p.rename([&](int i) { return i >= t_index ? i + 1 : i; });
  DiffPoly out(Domain::Rational);
  const DiffPoly t = DiffPoly::var(t_index, 0);
  for (const auto& [m, c] : moved.terms()) {
    const RatPoly a = p.domain() == Domain::RationalInT ? (RatFunc(l) * c.rational_in_t()).num() : RatPoly(c.rational());
    for (int k = 0; k <= a.degree(); ++k)
      if (a.coeff(k) != 0) out += DiffPoly::term(m, Scalar(a.coeff(k))) * t.pow(static_cast<unsigned>(k));
  }
  return {out, l};
}

}  // namespace

TimeExtension extend_solution_time(const ChangeOfVariables& cv, const std::vector<TruncSeries>& inputs, int truncation,
                                   const ExtensionOptions& options, int max_lambdas) {
  if (!cv.dependents.empty()) fail(ErrorCode::InvalidArgument, "time-mode extension supports hypersurface inputs only");
  if (static_cast<int>(inputs.size()) != cv.d) fail(ErrorCode::InvalidArgument, "expected d input series");
  const int t_index = cv.d + 1;
  const auto [p, lp] = adjoin_time(cv.p_star, t_index);
  const auto [guard, lg] = adjoin_time(cv.guard_star, t_index);
  const int t_truncation = truncation + std::max(0, p.max_order().value_or(0)) + 1;

  std::exception_ptr last;
  for (int k = 0; k < max_lambdas; ++k) {
    const mpq_class lambda(k % 2 == 1 ? (k + 1) / 2 : -(k / 2));
    if (lp(lambda) == 0 || lg(lambda) == 0) continue;
    std::vector<TruncSeries> aug = inputs;
    aug.push_back(TruncSeries::from_rationals({lambda, 1}, t_truncation));
    ExtensionReport report;
    try {
      report = extend_solution(p, guard, aug, truncation, options);
    } catch (const Error& e) {
      const ErrorCode c = e.code();
      if (c != ErrorCode::GuardUnsatisfiable && c != ErrorCode::InconsistentInitialCondition && c != ErrorCode::NoRationalRoot)
        throw;
      last = std::current_exception();
      continue;
    }
    const TruncSeries& tc = report.tuple[static_cast<std::size_t>(cv.d)];
    const Domain dom = tc.domain();
    for (int j = 0; j <= tc.truncation(); ++j) {
      const Scalar expected = j == 0 ? Scalar(lambda).to_domain(dom) : Scalar::of(j == 1 ? 1 : 0, dom);
      if (!(tc[j] == expected)) fail(ErrorCode::TimeComponentNotAffine, "time component is not s + lambda");
    }
    TimeExtension out{Scalar(lambda), report, {}};
    for (std::size_t i = 0; i < report.tuple.size(); ++i)
      if (static_cast<int>(i) != cv.d) out.solution.push_back(report.tuple[i]);
    return out;
  }
  if (last) std::rethrow_exception(last);
  fail(ErrorCode::GuardUnsatisfiable, "every tried lambda is a pole of the coefficients");
}

SampleReport verify_surjectivity_sample(const ChangeOfVariables& cv, int trials, int truncation, std::uint64_t seed,
                                        const ExtensionOptions& options) {
  SampleReport report;
  report.trials = trials;
  report.truncation = truncation;
  const int top = cv.d + 1;
  const int h = cv.p_star.order_wrt(top).value_or(0);
  const int need = std::max(truncation + std::max(0, cv.p_star.max_order().value_or(0) - h),
                            cv.guard_star.max_order().value_or(0));
  const bool time_mode = cv.domain == Domain::RationalInT;
  for (int k = 0; k < trials; ++k) {
    SampleTrial trial;
    trial.seed = derive_seed(seed, static_cast<std::uint64_t>(k));
    Rng rng(trial.seed);
    std::vector<TruncSeries> inputs;
    for (int i = 0; i < cv.d; ++i) {
      const long degree = uniform_int(rng, 0, 5);
      std::vector<mpq_class> coeffs;
      for (long j = 0; j <= degree; ++j) {
        mpq_class c(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4));
        c.canonicalize();
        coeffs.push_back(c);
      }
      inputs.push_back(TruncSeries::from_rationals(coeffs, need));
      trial.inputs.push_back(std::move(coeffs));
    }
    ExtensionOptions opts = options;
    opts.seed = derive_seed(trial.seed, 1);
    try {
      const ExtensionReport r = time_mode ? extend_solution_time(cv, inputs, truncation, opts).report
                                          : extend_with_fallback(cv.p_star, cv.guard_star, inputs, truncation, opts);
      trial.success = true;
      trial.backend = r.backend;
      trial.residual_depth = r.residual_depth;
      ++report.successes;
    } catch (const Error& e) {
      trial.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    report.results.push_back(std::move(trial));
  }
  return report;
}

}  // namespace diffnorm
