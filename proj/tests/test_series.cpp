#include <gtest/gtest.h>

#include <functional>

#include "diffnorm/error.hpp"

#include "diffnorm/roots.hpp"
#include "diffnorm/series.hpp"
#include "diffnorm/text.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace diffnorm;

namespace {

const NameList names{"y1", "y2"};

DiffPoly yy(const char* text) { return parse_diffpoly(text, names); }

TruncSeries series(std::vector<mpq_class> c, int m) { return TruncSeries::from_rationals(c, m); }

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Series, Arithmetic) {
  EXPECT_EQ(series_mul(series({1, 1}, 4), series({1, -1}, 4)), series({1, 0, -1}, 4));
  EXPECT_EQ(series_mul(series({1}, 4), series({3, 1, 2}, 4)), series({3, 1, 2}, 4));
  EXPECT_EQ(series_add(series({1, 2}, 3), series({0, 0, 5}, 3)), series({1, 2, 5}, 3));
  EXPECT_EQ(series_derive(series({1, 2, 3}, 2)), series({2, 6}, 1));
  EXPECT_EQ(series_mul(series({1, 1, 1}, 5), series({1, 1}, 2)).truncation(), 2);
}

TEST(Series, ExponentialSquared) {
  const int m = 10;
  std::vector<Scalar> ones(m + 1, Scalar(1));
  const TruncSeries e = taylor_series(ones);
  const TruncSeries sq = series_mul(e, e);
  for (int j = 0; j <= m; ++j) EXPECT_EQ(sq[j].rational(), mpq_class(1 << j) / oracle::factorial(j));
}

TEST(Series, Inverse) {
  EXPECT_EQ(series_inverse(series({1, -1}, 6)), series({1, 1, 1, 1, 1, 1, 1}, 6));
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<mpq_class> c = gen::random_coeffs(rng, 6, 9, 4);
    if (c[0] == 0) c[0] = 1;
    const TruncSeries a = series(c, 8);
    EXPECT_EQ(series_mul(a, series_inverse(a)), series({1}, 8));
  }
  EXPECT_EQ(code_of([] { series_inverse(series({0, 1}, 3)); }), ErrorCode::DivisionByZero);
}

TEST(Series, DerivativeIsLinearAndLeibniz) {
  Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncSeries a = series(gen::random_coeffs(rng, 8, 9, 4), 7);
    const TruncSeries b = series(gen::random_coeffs(rng, 8, 9, 4), 7);
    EXPECT_EQ(series_derive(series_mul(a, b)),
              series_add(series_mul(series_derive(a), b), series_mul(a, series_derive(b))));
  }
}

TEST(Taylor, Examples) {
  const TruncSeries c = taylor_series({Scalar(5), Scalar(0), Scalar(0)});
  EXPECT_EQ(c, series({5}, 2));
  std::vector<Scalar> facts;
  for (int j = 0; j <= 6; ++j) facts.emplace_back(oracle::factorial(j));
  EXPECT_EQ(taylor_series(facts), series({1, 1, 1, 1, 1, 1, 1}, 6));
  EXPECT_EQ(derivative_values_from_series(series({1, 1, 1, 1, 1, 1, 1}, 6)), facts);
}

TEST(EvaluateOnSeries, MatchesOracle) {
  Rng rng(53);
  const gen::PolyShape shape{2, 3, 3, 4, 5, true};
  for (int trial = 0; trial < 40; ++trial) {
    const DiffPoly p = gen::random_poly(rng, shape);
    const std::vector<oracle::Coeffs> raw{gen::random_coeffs(rng, 9, 9, 4), gen::random_coeffs(rng, 9, 9, 4)};
    const TruncSeries value = evaluate_on_series(p, {series(raw[0], 8), series(raw[1], 8)});
    const oracle::Coeffs expected = oracle::evaluate(p, raw, value.truncation());
    for (int j = 0; j <= value.truncation(); ++j) EXPECT_EQ(value[j].rational(), expected[static_cast<std::size_t>(j)]);
  }
}

TEST(Roots, RationalRoots) {
  const RatPoly p(std::vector<mpq_class>{mpq_class(-3, 2), mpq_class(1, 2), 1});  // (t - 1)(t + 3/2)
  EXPECT_EQ(rational_roots(p), (std::vector<mpq_class>{mpq_class(-3, 2), 1}));
  EXPECT_TRUE(rational_roots(RatPoly(std::vector<mpq_class>{-2, 0, 1})).empty());
  const RatPoly repeated = RatPoly(std::vector<mpq_class>{1, -2, 1}) * RatPoly(std::vector<mpq_class>{mpq_class(1, 3), 1});
  EXPECT_EQ(rational_roots(repeated), (std::vector<mpq_class>{mpq_class(-1, 3), 1}));
}

TEST(Roots, RandomProductsOfLinearFactors) {
  Rng rng(54);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<mpq_class> roots;
    RatPoly p(std::vector<mpq_class>{1});
    const int k = static_cast<int>(uniform_int(rng, 1, 5));
    for (int j = 0; j < k; ++j) {
      const mpq_class r = gen::random_rational(rng, 20, 7);
      roots.push_back(r);
      p = p * RatPoly(std::vector<mpq_class>{-r, 1});
    }
    p = p * RatPoly(std::vector<mpq_class>{2, 0, 1});
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    EXPECT_EQ(rational_roots(p), roots);
  }
}

TEST(Roots, ComplexRoots) {
  const auto r = complex_roots({std::complex<double>(1), std::complex<double>(0), std::complex<double>(1)});
  ASSERT_EQ(r.size(), 2u);
  for (const auto& z : r) EXPECT_NEAR(std::abs(z * z + 1.0), 0.0, 1e-12);
  EXPECT_EQ(simplest_rational(mpq_class(3, 10), mpq_class(2, 5)), mpq_class(1, 3));
  EXPECT_EQ(simplest_rational(mpq_class(-1, 2), mpq_class(1, 2)), 0);
}

TEST(Extend, LinearIntegration) {
  const ExtensionReport r = extend_solution(yy("y2' - y1"), yy("1"), {series({1}, 8)}, 8);
  const mpq_class c = r.tuple.back()[0].rational();
  EXPECT_EQ(r.tuple.back(), series({c, 1}, 8));
  EXPECT_EQ(r.residual_depth, 7);
  EXPECT_EQ(r.backend, Backend::Exact);
}

TEST(Extend, SquareRoot) {
  const ExtensionReport r = extend_solution(yy("y2*y2' - y1"), yy("y2"), {series({1}, 8)}, 8);
  EXPECT_EQ(r.tuple.back(), series({1, 1, mpq_class(-1, 2), mpq_class(1, 2), mpq_class(-5, 8), mpq_class(7, 8),
                                    mpq_class(-21, 16), mpq_class(33, 16), mpq_class(-429, 128)},
                                   8));
}

TEST(Extend, NoInputDependence) {
  Rng rng(55);
  const ExtensionReport r = extend_solution(yy("y2'"), yy("1"), {series(gen::random_coeffs(rng, 5, 9, 3), 8)}, 8);
  for (int j = 1; j <= 8; ++j) EXPECT_TRUE(r.tuple.back()[j].is_zero());
}

TEST(Extend, Deterministic) {
  const DiffPoly p = yy("(y2')^2 - y2 - y1");
  ExtensionOptions o;
  o.seed = 5;
  const ExtensionReport a = extend_solution(p, yy("y2"), {series({1, 2}, 8)}, 6, o);
  const ExtensionReport b = extend_solution(p, yy("y2"), {series({1, 2}, 8)}, 6, o);
  EXPECT_EQ(a.tuple, b.tuple);
  EXPECT_EQ(a.free_values, b.free_values);
}

TEST(Extend, Errors) {
  EXPECT_EQ(code_of([] { extend_solution(yy("(y2')^2 - 2"), yy("1"), {series({0}, 6)}, 6); }), ErrorCode::NoRationalRoot);
  EXPECT_EQ(code_of([] { extend_solution(yy("y2' - y1"), yy("0"), {series({0}, 6)}, 6); }), ErrorCode::GuardUnsatisfiable);
  EXPECT_EQ(code_of([] { extend_solution(yy("y2' - y1''"), yy("1"), {series({0}, 3)}, 6); }), ErrorCode::PreconditionOrder);
  const NameList xy{"x", "y"};
  const DiffPoly projection = parse_diffpoly("x*y' + (x' + 1)*y - 1", xy);
  try {
    extend_solution(projection, yy("1"), {series({0, -1}, 8)}, 6);
    FAIL();
  } catch (const InconsistentInitialCondition& e) {
    EXPECT_EQ(e.residual(), Scalar(-1));
  }
}

TEST(Extend, FloatBackend) {
  ExtensionOptions o;
  o.backend = Backend::Float;
  const ExtensionReport r = extend_solution(yy("(y2')^2 - 2"), yy("1"), {series({0}, 6)}, 6, o);
  EXPECT_EQ(r.backend, Backend::Float);
  EXPECT_NEAR(std::abs(r.tuple.back()[1].complex()), std::sqrt(2.0), 1e-9);
  EXPECT_GE(r.residual_depth, 5);
}
