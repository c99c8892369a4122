#include "diffnorm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diffnorm/error.hpp"

namespace diffnorm {

namespace {

using Complex = std::complex<long double>;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long double>(k));
  return out;
}

int sign_at(const RatPoly& p, const mpq_class& x) { return sgn(p(x)); }

}  // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() <= 1) return {};
  std::vector<std::complex<double>> zero_roots;
  while (c.front() == Complex(0)) {
    c.erase(c.begin());
    zero_roots.emplace_back(0.0, 0.0);
  }
  const std::size_t n = c.size() - 1;
  std::vector<std::complex<double>> out = zero_roots;
  if (n == 0) return out;

  // Cauchy bound for the starting circle.
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c[n]));
  radius = 1 + radius;
  const std::vector<Complex> dc = derivative(c);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius / 2, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex pk = horner(c, z[k]);
      const Complex dk = horner(dc, z[k]);
      if (pk == Complex(0)) continue;
      const Complex ratio = dk == Complex(0) ? Complex(1e-3L) : pk / dk;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] -= step;
      if (std::abs(step) > 1e-17L * (1 + std::abs(z[k]))) converged = false;
    }
    if (converged) break;
  }
  for (Complex& r : z) {
    for (int iter = 0; iter < 3; ++iter) {
      const Complex dk = horner(dc, r);
      if (dk == Complex(0)) break;
      r -= horner(c, r) / dk;
    }
    out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }
  return out;
}

mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) return simplest_rational(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(fl) == lo) return lo;
  if (mpq_class(fl + 1) <= hi) return mpq_class(fl + 1);
  const mpq_class base(fl);
  mpq_class inner = simplest_rational(1 / (hi - base), 1 / (lo - base));
  mpq_class out = base + 1 / inner;
  out.canonicalize();
  return out;
}

std::vector<mpq_class> rational_roots(const RatPoly& p) {
  if (p.degree() <= 0) return {};
  RatPoly sq = p.divmod(gcd(p, p.derivative())).first;
  std::vector<mpq_class> out;
  if (sq.coeff(0) == 0) {
    out.emplace_back(0);
    sq = sq.divmod(RatPoly::t()).first;
  }
  if (sq.degree() == 1) {
    out.push_back(-sq.coeff(0) / sq.coeff(1));
  } else if (sq.degree() > 1) {
    // A root p/q in lowest terms has q dividing the leading coefficient of
    // the primitive integer multiple; rationals with denominators <= q are
    // spaced at least 1/q^2 apart.
    mpz_class den = 1;
    for (const mpq_class& c : sq.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const mpq_class lead = abs(sq.leading() * den);
    const mpq_class width = 1 / (2 * lead * lead);

    std::vector<std::complex<double>> approx_coeffs;
    for (const mpq_class& c : sq.coeffs()) approx_coeffs.emplace_back(c.get_d(), 0.0);
    for (const auto& z : complex_roots(approx_coeffs)) {
      if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z))) continue;
      const double r = z.real();
      double delta = 1e-9 * (1 + std::abs(r));
      mpq_class lo, hi;
      int slo = 0, shi = 0;
      for (int attempt = 0; attempt < 30; ++attempt, delta *= 4) {
        lo = mpq_class(r - delta);
        hi = mpq_class(r + delta);
        slo = sign_at(sq, lo);
        shi = sign_at(sq, hi);
        if (slo == 0 || shi == 0 || slo != shi) break;
      }
      if (slo == 0) {
        out.push_back(lo);
        continue;
      }
      if (shi == 0) {
        out.push_back(hi);
        continue;
      }
      if (slo == shi) continue;
      bool exact = false;
      while (hi - lo >= width) {
        mpq_class mid = (lo + hi) / 2;
        const int sm = sign_at(sq, mid);
        if (sm == 0) {
          out.push_back(mid);
          exact = true;
          break;
        }
        (sm == slo ? lo : hi) = mid;
      }
      if (exact) continue;
      const mpq_class candidate = simplest_rational(lo, hi);
      if (sq(candidate) == 0) out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace diffnorm
