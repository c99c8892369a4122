#include <gtest/gtest.h>

#include <functional>

#include "diffnorm/error.hpp"

#include "diffnorm/algebra.hpp"
#include "diffnorm/text.hpp"
#include "support/generators.hpp"

using namespace diffnorm;
using gen::PolyShape;

namespace {

const NameList xy{"x", "y"};

DiffPoly xy_poly(const char* text) { return parse_diffpoly(text, xy); }

}  // namespace

TEST(DiffPoly, ZeroTermsVanish) {
  const DiffPoly p = xy_poly("x*y + 1");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).max_order(), std::nullopt);
}

TEST(DiffPoly, Orders) {
  EXPECT_EQ(xy_poly("x'' + y").order_wrt(1), 2);
  EXPECT_EQ(xy_poly("y").order_wrt(1), std::nullopt);
  const NameList ys{"y1", "y2"};
  EXPECT_EQ(parse_diffpoly("2*y2*y2'' - y2*y1 + (y1')^2", ys).order_wrt(2), 2);
  EXPECT_EQ(xy_poly("3").order_wrt(2), std::nullopt);
}

TEST(DiffPoly, DegreesAndCoefficients) {
  const DiffPoly p = xy_poly("x*(y')^2 + 3*y' - 1");
  const DerivVar y1{2, 1};
  EXPECT_EQ(p.degree_in(y1), 2);
  EXPECT_EQ(p.coefficient(y1, 2), xy_poly("x"));
  EXPECT_EQ(p.coefficient(y1, 0), xy_poly("-1"));
  EXPECT_EQ(p.partial(y1), xy_poly("2*x*y' + 3"));
  EXPECT_EQ(p.total_degree(), 3);
}

TEST(DiffPoly, RingAxioms) {
  Rng rng(11);
  const PolyShape shape{3, 2, 2, 4, 6, true};
  for (int trial = 0; trial < 100; ++trial) {
    const DiffPoly a = gen::random_poly(rng, shape), b = gen::random_poly(rng, shape),
                   c = gen::random_poly(rng, shape);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(Derive, Examples) {
  EXPECT_EQ(derive(xy_poly("x")), xy_poly("x'"));
  EXPECT_EQ(derive(xy_poly("x*y")), xy_poly("x'*y + x*y'"));
  EXPECT_EQ(derive(parse_diffpoly("t*x", xy, true)), parse_diffpoly("x + t*x'", xy, true));
  EXPECT_EQ(derive(parse_diffpoly("t^2", xy, true)), parse_diffpoly("2*t", xy, true));
  EXPECT_TRUE(derive(xy_poly("7")).is_zero());
}

TEST(Derive, LeibnizAndLinearity) {
  Rng rng(12);
  const PolyShape shape{2, 3, 3, 4, 9};
  for (int trial = 0; trial < 100; ++trial) {
    const DiffPoly a = gen::random_poly(rng, shape), b = gen::random_poly(rng, shape);
    EXPECT_EQ(derive(a * b), derive(a) * b + a * derive(b));
    EXPECT_EQ(derive(a + b), derive(a) + derive(b));
    EXPECT_EQ(derive(a, 2), derive(derive(a)));
  }
}

TEST(SeparantInitial, Examples) {
  const NameList y{"y"};
  const SeparantInitial a = separant_initial(parse_diffpoly("(y')^2 - 4*y", y), 1);
  EXPECT_EQ(a.separant, parse_diffpoly("2*y'", y));
  EXPECT_EQ(a.initial, parse_diffpoly("1", y));
  EXPECT_EQ(a.order, 1);
  EXPECT_EQ(a.degree, 2);

  const SeparantInitial b = separant_initial(xy_poly("x*y' + (x' + 1)*y - 1"), 2);
  EXPECT_EQ(b.separant, xy_poly("x"));
  EXPECT_EQ(b.initial, xy_poly("x"));
  EXPECT_EQ(b.order, 1);
  EXPECT_EQ(b.degree, 1);

  const SeparantInitial c = separant_initial(parse_diffpoly("y", y), 1);
  EXPECT_EQ(c.separant, parse_diffpoly("1", y));
  EXPECT_EQ(c.order, 0);

  try {
    separant_initial(xy_poly("x'"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedSeparant);
  }
}

TEST(Leader, DistinguishedIndeterminateRanksFirst) {
  const DiffPoly p = xy_poly("x''' + y");
  EXPECT_EQ(leader(p, Ranking{2}), (DerivVar{2, 0}));
  EXPECT_EQ(leader(p, Ranking{1}), (DerivVar{1, 3}));
  EXPECT_EQ(leader(xy_poly("5"), Ranking{1}), std::nullopt);
}

TEST(Substitute, Examples) {
  const Images swap{{1, xy_poly("y")}, {2, xy_poly("x")}};
  EXPECT_EQ(substitute(xy_poly("x'*y"), swap), xy_poly("y'*x"));

  const NameList ys{"y1", "y2"};
  const Images f1{{1, parse_diffpoly("y2", ys)}, {2, parse_diffpoly("y1 + y2''", ys)}};
  EXPECT_EQ(substitute(parse_diffpoly("y2' - y1", ys), f1), parse_diffpoly("y1' + y2''' - y2", ys));

  try {
    substitute(xy_poly("y"), Images{{1, xy_poly("x")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingImage);
  }
}

TEST(Substitute, CommutesWithDerivation) {
  Rng rng(13);
  const PolyShape shape{2, 2, 2, 3, 5};
  for (int trial = 0; trial < 60; ++trial) {
    const DiffPoly p = gen::random_poly(rng, shape);
    const Images images{{1, gen::random_poly(rng, shape)}, {2, gen::random_poly(rng, shape)}};
    EXPECT_EQ(substitute(derive(p), images), derive(substitute(p, images)));
    const DiffPoly q = gen::random_poly(rng, shape);
    EXPECT_EQ(substitute(p * q, images), substitute(p, images) * substitute(q, images));
  }
}

TEST(Evaluate, Examples) {
  const NameList y{"y"};
  DerivTable g;
  g.set({1, 0}, Scalar(1));
  g.set({1, 1}, Scalar(1));
  EXPECT_EQ(evaluate(parse_diffpoly("y' - y", y), g), Scalar(0));
  g.set({1, 1}, Scalar(2));
  EXPECT_EQ(evaluate(parse_diffpoly("(y')^2 - 4*y", y), g), Scalar(0));

  DerivTable h;
  h.set({1, 0}, Scalar(0));
  h.set({1, 1}, Scalar(-1));
  h.set({2, 0}, Scalar(1));
  h.set({2, 1}, Scalar(0));
  EXPECT_EQ(evaluate(xy_poly("x*y' + (x' + 1)*y - 1"), h), Scalar(-1));

  try {
    evaluate(xy_poly("x''"), h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnassignedVariable);
  }
}

TEST(ExactDivide, RecoversFactors) {
  Rng rng(14);
  const PolyShape shape{2, 2, 2, 3, 5};
  for (int trial = 0; trial < 60; ++trial) {
    const DiffPoly a = gen::random_poly(rng, shape);
    DiffPoly b = gen::random_poly(rng, shape);
    if (b.is_zero()) b = DiffPoly::constant(2);
    const auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(exact_divide(xy_poly("x + 1"), xy_poly("x")).has_value());
}

TEST(Gcd, CommonFactorAndNormalization) {
  EXPECT_EQ(gcd(xy_poly("x^2 - y^2"), xy_poly("2*x + 2*y")), normalized(xy_poly("x + y")));
  EXPECT_EQ(gcd(xy_poly("x'*y"), xy_poly("x'")), xy_poly("x'"));
  EXPECT_EQ(gcd(xy_poly("x + 1"), xy_poly("x")), xy_poly("1"));

  Rng rng(15);
  const PolyShape shape{2, 1, 2, 3, 5};
  for (int trial = 0; trial < 40; ++trial) {
    const DiffPoly a = gen::random_poly(rng, shape), b = gen::random_poly(rng, shape);
    DiffPoly c = gen::random_poly(rng, shape);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    const DiffPoly g = gcd(a * c, b * c);
    EXPECT_TRUE(exact_divide(a * c, g).has_value());
    EXPECT_TRUE(exact_divide(b * c, g).has_value());
    EXPECT_TRUE(exact_divide(g, normalized(c)).has_value());
  }
}

TEST(PseudoRemainder, DropsDegree) {
  const DerivVar v{1, 0};
  const DiffPoly r = pseudo_remainder(xy_poly("x^3 + y"), xy_poly("y*x + 1"), v);
  EXPECT_LT(r.degree_in(v), 1);
}
