// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cli/commands.hpp"
#include "cli/system_file.hpp"
#include "diffnorm/algebra.hpp"
#include "diffnorm/pipeline.hpp"
#include "diffnorm/reduction.hpp"
#include "diffnorm/series.hpp"
#include "diffnorm/text.hpp"
#include "diffnorm/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace diffnorm;
using diffnorm::gen::PolyShape;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string count(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

std::vector<oracle::Coeffs> as_coeffs(const std::vector<TruncSeries>& tuple) {
  std::vector<oracle::Coeffs> out;
  for (const TruncSeries& s : tuple) {
    oracle::Coeffs c;
    for (const Scalar& v : s.coeffs()) c.push_back(v.rational());
    out.push_back(c);
  }
  return out;
}

Outcome reduction_certificates() {
  const auto start = Clock::now();
  Rng rng(101);
  int good = 0;
  int reduced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PolyShape shape{static_cast<int>(uniform_int(rng, 1, 3)), 3, 3, 4, 5};
    const int i = shape.indeterminates;
    // P of order h < 3 in y_i and Q of order 3, so every trial actually reduces.
    const int h = static_cast<int>(uniform_int(rng, 0, 2));
    PolyShape low = shape;
    low.max_order = h;
    low.max_degree = 2;
    const DiffPoly p = gen::random_poly(rng, low) + DiffPoly::var(i, h) * gen::random_monomial_poly(rng, low);
    if (p.order_wrt(i) != h) {
      --trial;
      continue;
    }
    const DiffPoly q = gen::random_poly(rng, shape) + DiffPoly::var(i, 3) * gen::random_monomial_poly(rng, low);
    const ReductionCertificate cert = partial_reduce(q, p, i);
    if (cert.power > 0) ++reduced;
    const DiffPoly s = separant_initial(p, i).separant;
    DiffPoly rhs = cert.remainder;
    for (const auto& [j, c] : cert.cofactors) rhs += c * derive(p, j);
    if (s.pow(static_cast<unsigned>(cert.power)) * q == rhs && cert.remainder.order_wrt(i) <= p.order_wrt(i)) ++good;
  }
  const double t = seconds_since(start);
  return {good == 200 && t < 30, count(good, 200) + " certificates exact (" + std::to_string(reduced) + " with N > 0), " +
                                        std::to_string(t) + " s"};
}

Outcome resultant_certificates() {
  Rng rng(202);
  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    PolyShape shape{static_cast<int>(uniform_int(rng, 1, 3)), 2, 3, 4, 5};
    const DerivVar v{static_cast<int>(uniform_int(rng, 1, shape.indeterminates)),
                     static_cast<int>(uniform_int(rng, 0, shape.max_order))};
    DiffPoly p = gen::random_poly(rng, shape) + DiffPoly::var(v).pow(static_cast<unsigned>(uniform_int(rng, 1, 3)));
    DiffPoly g = gen::random_poly(rng, shape) + DiffPoly::var(v) * gen::random_monomial_poly(rng, shape);
    if (p.degree_in(v) == 0 && g.degree_in(v) == 0) g += DiffPoly::var(v);
    const ResultantCertificate r = resultant_with_cofactors(p, g, v);
    if (r.resultant == r.a * p + r.b * g && !r.resultant.involves(v)) ++good;
  }
  return {good == 100, count(good, 100) + " Bezout identities exact, eliminated variable absent"};
}

Outcome manageability_fixtures() {
  const NameList names{"y1", "y2"};
  const bool first = is_manageable(parse_diffpoly("2*y2*y2'' - y2*y1 + (y1')^2", names), 2);
  const bool second = is_manageable(parse_diffpoly("2*y2*y2'' + y2*y2''*y1 + (y1')^2", names), 2);
  return {first && !second, std::string("first ") + (first ? "true" : "false") + ", second " + (second ? "true" : "false")};
}

Outcome make_manageable_random() {
  Rng rng(404);
  int good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    PolyShape shape{static_cast<int>(uniform_int(rng, 1, 2)), 2, 3, 4, 5};
    const int i = shape.indeterminates;
    DiffPoly q = gen::random_poly(rng, shape);
    if (q.is_zero()) q = DiffPoly::constant(1);
    ShiftSearchParams params;
    params.seed = derive_seed(404, static_cast<std::uint64_t>(trial));
    const Automorphism f2 = make_manageable(q, i, params, i);
    const DiffPoly image = apply(f2, q);
    if (is_manageable(image, i) && round_trip_holds(f2) && apply_inverse(f2, image) == q &&
        f2.forward.at(i) == DiffPoly::var(i))
      ++good;
  }
  return {good == 50, count(good, 50) + " manageable with exact round trip"};
}

Outcome make_high_order_random() {
  Rng rng(505);
  int good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = static_cast<int>(uniform_int(rng, 1, 2));
    const int top = d + 1;
    PolyShape shape{top, 2, 2, 3, 5};
    const int h = static_cast<int>(uniform_int(rng, 1, 3));
    const DiffPoly p = gen::random_poly(rng, shape) + DiffPoly::var(top, h) * gen::random_monomial_poly(rng, shape);
    DiffPoly s = gen::random_poly(rng, PolyShape{top, h - 1, 2, 3, 5});
    if (p.order_wrt(top) <= s.order_wrt(top)) {
      --trial;
      continue;
    }
    if (s.is_zero()) s = DiffPoly::constant(1);
    const Automorphism f1 = make_high_order(p, s, d);
    const DiffPoly p1 = apply(f1, p);
    const DiffPoly s1 = apply(f1, s);
    bool ok = p1.order_wrt(top) > s1.order_wrt(top) && round_trip_holds(f1);
    for (int j = 1; j <= d; ++j) ok = ok && p1.order_wrt(top) > std::max(p1.order_wrt(j), s1.order_wrt(j));
    if (ok) ++good;
  }
  return {good == 50, count(good, 50) + " pairs satisfy both inequalities"};
}

// Compares one extension against the oracle and a closed form when given.
bool extension_matches(const DiffPoly& p, const DiffPoly& guard, const std::vector<TruncSeries>& inputs, int h, int m,
                       const oracle::Coeffs& closed, std::string& note) {
  const ExtensionReport r = extend_solution(p, guard, inputs, m);
  oracle::Coeffs head;
  for (std::size_t j = 0; j < r.free_values.size(); ++j)
    head.push_back(r.free_values[j].rational() / oracle::factorial(static_cast<int>(j)));
  head.push_back(r.root.rational() / oracle::factorial(h));
  std::vector<oracle::Coeffs> in = as_coeffs(inputs);
  const auto expected = oracle::extend(p, in, head, h, m);
  const oracle::Coeffs got = as_coeffs({r.tuple.back()}).front();
  bool ok = expected && *expected == got && static_cast<int>(got.size()) == m + 1;
  if (!closed.empty()) ok = ok && closed == got;
  std::vector<oracle::Coeffs> tuple = as_coeffs(r.tuple);
  for (const mpq_class& c : oracle::evaluate(p, tuple, m - h)) ok = ok && c == 0;
  if (!ok) note += " mismatch";
  return ok;
}

Outcome extension_fixtures() {
  const int m = 20;
  std::string note;
  const NameList names{"y1", "y2"};
  Rng rng(606);
  const oracle::Coeffs f = gen::random_coeffs(rng, 6, 9, 4);
  const DiffPoly linear = parse_diffpoly("y2' - y1", names);
  oracle::Coeffs integral{0};
  for (int k = 0; k < m; ++k) integral.push_back(k < 6 ? f[static_cast<std::size_t>(k)] / (k + 1) : mpq_class(0));
  const bool a = extension_matches(linear, DiffPoly::constant(1), {TruncSeries::from_rationals(f, m)}, 1, m, integral, note);

  const DiffPoly sqrt_eq = parse_diffpoly("y2*y2' - y1", names);
  const bool b = extension_matches(sqrt_eq, DiffPoly::var(2), {TruncSeries::from_rationals({1}, m)}, 1, m,
                                   oracle::binomial_series(2, mpq_class(1, 2), m), note);

  const DiffPoly riccati = parse_diffpoly("(y1')^2 - 4*y1", names);
  oracle::Coeffs square(static_cast<std::size_t>(m + 1), mpq_class(0));
  square[0] = 1;
  square[1] = 2;
  square[2] = 1;
  const bool c = extension_matches(riccati, DiffPoly::var(1), {}, 1, m, square, note);
  return {a && b && c, std::string("linear ") + (a ? "ok" : "bad") + ", sqrt(1+2t) " + (b ? "ok" : "bad") +
                           ", constant " + (c ? "ok" : "bad") + " through M = 20" + note};
}

Outcome section6_fixture() {
  const auto start = Clock::now();
  const NameList names{"x", "y"};
  const DiffPoly p = parse_diffpoly("x*y' + (x' + 1)*y - 1", names);
  const int m = 10;
  const TruncSeries minus_t = TruncSeries::from_rationals({0, -1}, m + 1);
  bool direct_fails = false;
  std::string residual = "none";
  try {
    extend_solution(p, DiffPoly::constant(1), {minus_t}, m);
  } catch (const InconsistentInitialCondition& e) {
    residual = e.residual().to_string();
    direct_fails = e.residual() == Scalar(-1);
  }
  System sys;
  sys.n = 2;
  sys.d = 1;
  sys.equations = {p};
  sys.inequation = parse_diffpoly("x", names);
  NormalizeParams params;
  params.shift.seed = 7;
  const ChangeOfVariables cv = normalize(sys, params);
  const SampleReport report = verify_surjectivity_sample(cv, 20, m, 7);

  const int need = m + std::max(0, cv.p_star.max_order().value_or(0) - cv.p_star.order_wrt(2).value_or(0));
  const ExtensionReport through =
      extend_solution(cv.p_star, cv.guard_star, {TruncSeries::from_rationals({0, -1}, need)}, m);
  const std::vector<TruncSeries> original = pull_back(cv, through.tuple);
  const int h = cv.p_star.order_wrt(2).value_or(0);
  bool pulled_ok = true;
  const int depth = std::min(original[0].truncation(), original[1].truncation());
  for (const mpq_class& c : oracle::evaluate(p, as_coeffs(original), depth - 1)) pulled_ok = pulled_ok && c == 0;
  (void)h;
  const double t = seconds_since(start);
  return {direct_fails && report.successes == 20 && pulled_ok && t < 60,
          "direct residual " + residual + ", normalized " + count(report.successes, 20) + " inputs extend, x = -t through the map " +
              (pulled_ok ? "ok" : "bad") + ", " + std::to_string(t) + " s"};
}

Outcome poly_shift_random() {
  Rng rng(808);
  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    PolyShape shape{static_cast<int>(uniform_int(rng, 1, 3)), 2, 3, 4, 5};
    DiffPoly p = gen::random_poly(rng, shape);
    if (p.is_zero()) p = DiffPoly::var(1, 1);
    const int h = p.max_order().value_or(0) + static_cast<int>(uniform_int(rng, 0, 1));
    ShiftSearchParams params;
    params.seed = derive_seed(808, static_cast<std::uint64_t>(trial));
    const std::vector<RatPoly> s = find_poly_shift(p, h, params, std::max(1, p.max_index()));
    bool ok = true;
    std::vector<oracle::Coeffs> series;
    for (const RatPoly& si : s) {
      ok = ok && si.degree() <= h;
      series.push_back(si.coeffs());
    }
    const int bound = std::max(1, p.total_degree()) * std::max(1, h) + 1;
    bool nonzero = false;
    for (const mpq_class& c : oracle::evaluate(p, series, bound)) nonzero = nonzero || c != 0;
    if (ok && nonzero) ++good;
  }
  return {good == 100, count(good, 100) + " shifts within the degree bound and nonvanishing"};
}

Outcome taylor_correspondence() {
  Rng rng(909);
  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Scalar> values;
    const int len = static_cast<int>(uniform_int(rng, 1, 15));
    for (int j = 0; j < len; ++j) values.emplace_back(gen::random_rational(rng, 50, 9));
    const TruncSeries s = taylor_series(values);
    bool ok = derivative_values_from_series(s) == values;
    for (int j = 0; j < len; ++j) ok = ok && s[j].rational() * oracle::factorial(j) == values[static_cast<std::size_t>(j)].rational();
    if (ok) ++good;
  }
  const int m = 12;
  std::vector<Scalar> ones(m + 1, Scalar(1)), facts;
  oracle::Coeffs exp_coeffs, geo(m + 1, mpq_class(1));
  for (int j = 0; j <= m; ++j) {
    facts.emplace_back(oracle::factorial(j));
    exp_coeffs.push_back(1 / oracle::factorial(j));
  }
  const bool exp_ok = as_coeffs({taylor_series(ones)}).front() == exp_coeffs &&
                      derivative_values_from_series(taylor_series(ones)) == ones;
  const bool geo_ok = as_coeffs({taylor_series(facts)}).front() == geo &&
                      derivative_values_from_series(TruncSeries::from_rationals(geo, m)) == facts;
  return {good == 100 && exp_ok && geo_ok, count(good, 100) + " tables round trip, exponential " + (exp_ok ? "ok" : "bad") +
                                               ", geometric " + (geo_ok ? "ok" : "bad")};
}

Outcome cli_determinism() {
  const std::string system = "indeterminates: x, y\ndimension: 1\nequation: x*y' + (x' + 1)*y - 1\nseed: 7\n";
  cli::Flags flags;
  const std::string first = cli::render(cli::run_normalize(system, flags));
  const std::string second = cli::render(cli::run_normalize(system, flags));
  flags.trials = 5;
  const std::string v1 = cli::render(cli::run_verify(first, flags));
  const std::string v2 = cli::render(cli::run_verify(first, flags));
  const bool deterministic = first == second && v1 == v2;

  Rng rng(1010);
  int good = 0;
  const NameList names{"x", "y", "z"};
  for (int trial = 0; trial < 200; ++trial) {
    PolyShape shape{3, 5, 3, 5, 20, true};
    const DiffPoly p = gen::random_poly(rng, shape);
    const bool named = trial % 2 == 0;
    const NameList& use = named ? names : NameList{};
    const std::string text = format_diffpoly(p, use);
    if (parse_diffpoly(text, use) == p && format_diffpoly(parse_diffpoly(text, use), use) == text) ++good;
  }
  return {deterministic && good == 200, std::string("documents ") + (deterministic ? "byte-identical" : "differ") +
                                            ", " + count(good, 200) + " parse/format round trips"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reduction certificates", reduction_certificates},
      {"resultant certificates", resultant_certificates},
      {"manageability fixtures", manageability_fixtures},
      {"make_manageable", make_manageable_random},
      {"make_high_order", make_high_order_random},
      {"solution extension", extension_fixtures},
      {"end-to-end normalization fixture", section6_fixture},
      {"find_poly_shift", poly_shift_random},
      {"Taylor correspondence", taylor_correspondence},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
