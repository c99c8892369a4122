#include <gtest/gtest.h>

#include "diffnorm/rational_poly.hpp"
#include "diffnorm/error.hpp"
#include "diffnorm/scalar.hpp"
#include "support/generators.hpp"

using namespace diffnorm;

namespace {

RatPoly poly(std::initializer_list<long> cs) {
  std::vector<mpq_class> v;
  for (long c : cs) v.emplace_back(c);
  return RatPoly(v);
}

RatPoly random_ratpoly(Rng& rng, int degree) { return RatPoly(gen::random_coeffs(rng, degree + 1, 9, 5)); }

}  // namespace

TEST(RatPoly, TrimsLeadingZeros) {
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(RatPoly().degree(), -1);
}

TEST(RatPoly, DivmodReconstructs) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly a = random_ratpoly(rng, static_cast<int>(uniform_int(rng, 0, 6)));
    RatPoly b = random_ratpoly(rng, static_cast<int>(uniform_int(rng, 0, 3)));
    if (b.is_zero()) b = poly({1});
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(RatPoly, DerivativeAndComposition) {
  EXPECT_EQ(poly({1, 1, 1}).derivative(), poly({1, 2}));
  EXPECT_EQ(poly({0, 0, 1}).compose(poly({1, 1})), poly({1, 2, 1}));
  EXPECT_EQ(poly({1, 0, -1})(mpq_class(1)), 0);
  EXPECT_EQ(poly({2, 4}).monic(), RatPoly(std::vector<mpq_class>{mpq_class(1, 2), 1}));
}

TEST(RatPoly, ProductRuleForDerivative) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly a = random_ratpoly(rng, 4), b = random_ratpoly(rng, 3);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
  }
}

TEST(RatFunc, ReducesAndAdds) {
  const RatFunc half_t(poly({0, 1}), poly({2}));
  const RatFunc sum = half_t + half_t;
  EXPECT_EQ(sum, RatFunc(poly({0, 1})));
  const RatFunc cancel(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_TRUE(cancel.is_polynomial());
  EXPECT_EQ(cancel, RatFunc(poly({1, 1})));
}

TEST(Scalar, DomainsDoNotMix) {
  const Scalar q(mpq_class(1, 3));
  const Scalar z(std::complex<double>(1.0, 2.0));
  EXPECT_THROW((void)(q + z), Error);
  try {
    (void)(q * z);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TagMismatch);
  }
  EXPECT_EQ(q.to_domain(Domain::Complex) + z, Scalar(std::complex<double>(1.0 + 1.0 / 3.0, 2.0)));
  EXPECT_THROW(z.to_domain(Domain::Rational), Error);
}

TEST(Scalar, ComplexEqualityUsesTolerance) {
  EXPECT_EQ(Scalar(std::complex<double>(1.0, 0.0)), Scalar(std::complex<double>(1.0 + 1e-12, 0.0)));
  EXPECT_NE(Scalar(std::complex<double>(1.0, 0.0)), Scalar(std::complex<double>(1.0 + 1e-6, 0.0)));
}

TEST(Scalar, DivisionByZero) {
  try {
    (void)(Scalar(1) / Scalar(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Scalar, FieldAxiomsOnRationals) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar a(gen::random_rational(rng, 20, 7)), b(gen::random_rational(rng, 20, 7)),
        c(gen::random_rational(rng, 20, 7));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}
