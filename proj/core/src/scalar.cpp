#include "diffnorm/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "diffnorm/error.hpp"

namespace diffnorm {

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Rational: return "rational";
    case Domain::RationalInT: return "rational-in-t";
    case Domain::Complex: return "complex";
  }
  return "?";
}

Scalar::Scalar(const mpq_class& q) : value_(q) { std::get<mpq_class>(value_).canonicalize(); }

Scalar Scalar::of(long n, Domain d, double tolerance) {
  switch (d) {
    case Domain::Rational: return Scalar(mpq_class(n));
    case Domain::RationalInT: return Scalar(RatFunc(mpq_class(n)));
    case Domain::Complex: return Scalar(std::complex<double>(static_cast<double>(n), 0.0), tolerance);
  }
  return Scalar(mpq_class(n));
}

Domain Scalar::domain() const { return static_cast<Domain>(value_.index()); }

bool Scalar::is_zero() const {
  switch (domain()) {
    case Domain::Rational: return sgn(std::get<mpq_class>(value_)) == 0;
    case Domain::RationalInT: return std::get<RatFunc>(value_).is_zero();
    case Domain::Complex: {
      const auto& c = std::get<ComplexValue>(value_);
      return std::abs(c.value) <= c.tolerance;
    }
  }
  return false;
}

bool Scalar::is_one() const {
  switch (domain()) {
    case Domain::Rational: return std::get<mpq_class>(value_) == 1;
    case Domain::RationalInT: return std::get<RatFunc>(value_).is_one();
    case Domain::Complex: {
      const auto& c = std::get<ComplexValue>(value_);
      return std::abs(c.value - 1.0) <= c.tolerance;
    }
  }
  return false;
}

bool Scalar::is_constant() const {
  return domain() != Domain::RationalInT || std::get<RatFunc>(value_).is_constant();
}

const mpq_class& Scalar::rational() const {
  if (domain() != Domain::Rational) fail(ErrorCode::TagMismatch, "scalar is not an exact rational");
  return std::get<mpq_class>(value_);
}

const RatFunc& Scalar::rational_in_t() const {
  if (domain() != Domain::RationalInT) fail(ErrorCode::TagMismatch, "scalar is not in Q(t)");
  return std::get<RatFunc>(value_);
}

std::complex<double> Scalar::complex() const {
  if (domain() != Domain::Complex) fail(ErrorCode::TagMismatch, "scalar is not complex");
  return std::get<ComplexValue>(value_).value;
}

double Scalar::tolerance() const {
  if (domain() == Domain::Complex) return std::get<ComplexValue>(value_).tolerance;
  return 0.0;
}

void Scalar::require_same(const Scalar& o) const {
  if (value_.index() != o.value_.index())
    fail(ErrorCode::TagMismatch, "mixing " + diffnorm::to_string(domain()) + " and " +
                                     diffnorm::to_string(o.domain()) + " scalars");
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(mpq_class(-v));
        } else if constexpr (std::is_same_v<T, RatFunc>) {
          return Scalar(-v);
        } else {
          return Scalar(-v.value, v.tolerance);
        }
      },
      value_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  switch (domain()) {
    case Domain::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_); break;
    case Domain::RationalInT:
      std::get<RatFunc>(value_) = std::get<RatFunc>(value_) + std::get<RatFunc>(o.value_);
      break;
    case Domain::Complex: std::get<ComplexValue>(value_).value += std::get<ComplexValue>(o.value_).value; break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  switch (domain()) {
    case Domain::Rational: std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_); break;
    case Domain::RationalInT:
      std::get<RatFunc>(value_) = std::get<RatFunc>(value_) - std::get<RatFunc>(o.value_);
      break;
    case Domain::Complex: std::get<ComplexValue>(value_).value -= std::get<ComplexValue>(o.value_).value; break;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (domain()) {
    case Domain::Rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_); break;
    case Domain::RationalInT:
      std::get<RatFunc>(value_) = std::get<RatFunc>(value_) * std::get<RatFunc>(o.value_);
      break;
    case Domain::Complex: std::get<ComplexValue>(value_).value *= std::get<ComplexValue>(o.value_).value; break;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "scalar division by zero");
  switch (domain()) {
    case Domain::Rational: std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_); break;
    case Domain::RationalInT:
      std::get<RatFunc>(value_) = std::get<RatFunc>(value_) / std::get<RatFunc>(o.value_);
      break;
    case Domain::Complex: std::get<ComplexValue>(value_).value /= std::get<ComplexValue>(o.value_).value; break;
  }
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = Scalar::one(domain(), tolerance());
  Scalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar Scalar::inverse() const { return Scalar::one(domain(), tolerance()) / *this; }

Scalar Scalar::derivative() const {
  if (domain() == Domain::RationalInT) return Scalar(std::get<RatFunc>(value_).derivative());
  return Scalar::zero(domain(), tolerance());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  switch (a.domain()) {
    case Domain::Rational: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case Domain::RationalInT: return std::get<RatFunc>(a.value_) == std::get<RatFunc>(b.value_);
    case Domain::Complex: {
      const auto& x = std::get<ComplexValue>(a.value_);
      const auto& y = std::get<ComplexValue>(b.value_);
      return std::abs(x.value - y.value) <= std::max(x.tolerance, y.tolerance);
    }
  }
  return false;
}

Scalar Scalar::to_complex(double tolerance) const {
  switch (domain()) {
    case Domain::Rational: return Scalar(std::complex<double>(std::get<mpq_class>(value_).get_d(), 0.0), tolerance);
    case Domain::RationalInT: {
      const auto& f = std::get<RatFunc>(value_);
      if (!f.is_constant()) fail(ErrorCode::TagMismatch, "cannot promote a t-dependent scalar to complex");
      mpq_class v = f(mpq_class(0));
      return Scalar(std::complex<double>(v.get_d(), 0.0), tolerance);
    }
    case Domain::Complex: return Scalar(std::get<ComplexValue>(value_).value, tolerance);
  }
  return *this;
}

Scalar Scalar::to_time_mode() const {
  switch (domain()) {
    case Domain::Rational: return Scalar(RatFunc(std::get<mpq_class>(value_)));
    case Domain::RationalInT: return *this;
    case Domain::Complex: fail(ErrorCode::TagMismatch, "complex scalars have no time-mode form");
  }
  return *this;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string Scalar::to_string() const {
  switch (domain()) {
    case Domain::Rational: return std::get<mpq_class>(value_).get_str();
    case Domain::RationalInT: return std::get<RatFunc>(value_).to_string();
    case Domain::Complex: {
      auto z = std::get<ComplexValue>(value_).value;
      if (z.imag() == 0.0) return format_double(z.real());
      std::string im = format_double(z.imag());
      if (im.front() != '-') im = "+" + im;
      return "(" + format_double(z.real()) + im + "i)";
    }
  }
  return "?";
}

Scalar Scalar::to_domain(Domain d, double tolerance) const {
  if (domain() == d) return *this;
  if (d == Domain::RationalInT) return to_time_mode();
  if (d == Domain::Complex) return to_complex(tolerance);
  fail(ErrorCode::TagMismatch, "cannot demote " + diffnorm::to_string(domain()) + " to " + diffnorm::to_string(d));
}

mpq_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(f);
}

}  // namespace diffnorm
