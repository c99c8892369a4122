#include "diffnorm/reduction.hpp"

#include <vector>

#include "diffnorm/error.hpp"

namespace diffnorm {

namespace {

DiffPoly var_power(const DerivVar& v, int k, const DiffPoly& like) {
  return DiffPoly::term(k == 0 ? Monomial() : Monomial(v, k), like.scalar(1));
}

}  // namespace

ReductionCertificate partial_reduce(const DiffPoly& q, const DiffPoly& p, int index) {
  const SeparantInitial si = separant_initial(p, index);
  const int h = si.order;
  const DiffPoly& s = si.separant;
  const bool unit_separant = s.is_constant();
  const Scalar s_inverse = unit_separant ? s.constant_term().inverse() : p.scalar(1);

  ReductionCertificate cert{q, 0, {}};
  std::vector<DiffPoly> derivs{p};
  DiffPoly& current = cert.remainder;
  while (true) {
    const Order big_h = current.order_wrt(index);
    if (!big_h || *big_h <= h) break;
    const int shift = *big_h - h;
    while (static_cast<int>(derivs.size()) <= shift) derivs.push_back(derive(derivs.back()));
    const DerivVar x{index, *big_h};
    const int d = current.degree_in(x);
    const DiffPoly step = current.coefficient(x, d) * var_power(x, d - 1, p);
    if (unit_separant) {
      const DiffPoly scaled = step * s_inverse;
      current -= scaled * derivs[shift];
      auto [it, inserted] = cert.cofactors.try_emplace(shift, scaled);
      if (!inserted) it->second += scaled;
    } else {
      current = s * current - step * derivs[shift];
      for (auto& [j, c] : cert.cofactors) c = s * c;
      auto [it, inserted] = cert.cofactors.try_emplace(shift, step);
      if (!inserted) it->second += step;
      ++cert.power;
    }
  }
  std::erase_if(cert.cofactors, [](const auto& entry) { return entry.second.is_zero(); });
#ifndef NDEBUG
  if (!certificate_holds(cert, q, p, index))
    fail(ErrorCode::InvariantViolation, "reduction certificate identity failed");
#endif
  return cert;
}

bool certificate_holds(const ReductionCertificate& cert, const DiffPoly& q, const DiffPoly& p, int index) {
  const DiffPoly s = separant_initial(p, index).separant;
  DiffPoly rhs = cert.remainder;
  for (const auto& [j, c] : cert.cofactors) rhs += c * derive(p, j);
  const Order h = p.order_wrt(index);
  return s.pow(static_cast<unsigned>(cert.power)) * q == rhs && cert.remainder.order_wrt(index) <= h;
}

namespace {

using Matrix = std::vector<std::vector<DiffPoly>>;

DiffPoly bareiss_determinant(Matrix m, const DiffPoly& like) {
  const std::size_t n = m.size();
  if (n == 0) return like.one_like();
  bool negate = false;
  DiffPoly previous = like.one_like();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return like.zero_like();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const DiffPoly numer = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto quotient = exact_divide(numer, previous);
        if (!quotient) fail(ErrorCode::InvariantViolation, "Bareiss step not exact");
        m[i][j] = std::move(*quotient);
      }
      m[i][k] = like.zero_like();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Matrix minor_without(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<DiffPoly> r;
    r.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ResultantCertificate resultant_with_cofactors(const DiffPoly& p, const DiffPoly& g, const DerivVar& v) {
  const int dp = p.degree_in(v);
  const int dg = g.degree_in(v);
  if (p.is_zero() || g.is_zero()) {
    if (p.involves(v) || g.involves(v)) return {p.zero_like(), p.zero_like(), p.zero_like(), v};
    fail(ErrorCode::BothConstantInV, "neither polynomial involves " + std::to_string(v.index));
  }
  if (dp == 0 && dg == 0) fail(ErrorCode::BothConstantInV, "both polynomials are constant in the variable");
  if (dg == 0) {
    const auto e = static_cast<unsigned>(dp);
    return {g.pow(e), p.zero_like(), g.pow(e - 1), v};
  }
  if (dp == 0) {
    const auto e = static_cast<unsigned>(dg);
    return {p.pow(e), p.pow(e - 1), p.zero_like(), v};
  }

  // Columns hold the coefficients of v^(n-1) .. v^0, n = dp + dg.
  const auto n = static_cast<std::size_t>(dp + dg);
  const auto pc = p.univariate_coefficients(v);
  const auto gc = g.univariate_coefficients(v);
  Matrix sylvester(n, std::vector<DiffPoly>(n, p.zero_like()));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= dp; ++k) sylvester[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = pc[static_cast<std::size_t>(k)];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dg; ++k)
      sylvester[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + dg - k)] = gc[static_cast<std::size_t>(k)];

  // Expanding along the last column with entries replaced by v^e * P and
  // v^e * G gives the cofactors directly.
  ResultantCertificate out{bareiss_determinant(sylvester, p), p.zero_like(), p.zero_like(), v};
  const std::size_t last = n - 1;
  for (std::size_t r = 0; r < n; ++r) {
    DiffPoly minor = bareiss_determinant(minor_without(sylvester, r, last), p);
    if (minor.is_zero()) continue;
    if ((r + last) % 2 == 1) minor = -minor;
    const bool p_row = r < static_cast<std::size_t>(dg);
    const int e = p_row ? dg - 1 - static_cast<int>(r) : dp - 1 - static_cast<int>(r - static_cast<std::size_t>(dg));
    (p_row ? out.a : out.b) += minor * var_power(v, e, p);
  }
#ifndef NDEBUG
  if (out.resultant != out.a * p + out.b * g || out.resultant.involves(v))
    fail(ErrorCode::InvariantViolation, "resultant certificate identity failed");
#endif
  return out;
}

bool saturation_membership(const DiffPoly& q, const DiffPoly& p, int index) {
  const ReductionCertificate cert = partial_reduce(q, p, index);
  if (cert.remainder.is_zero()) return true;
  return exact_divide(cert.remainder, p).has_value();
}

void check_irreducibility_hints(const DiffPoly& p, int index) {
  const SeparantInitial si = separant_initial(p, index);
  const DerivVar v{index, si.order};
  if (!content(p, v).is_constant())
    fail(ErrorCode::ReducibleInput, "polynomial has a non-trivial content in its leader");
  if (si.degree >= 2 && resultant_with_cofactors(p, si.separant, v).resultant.is_zero())
    fail(ErrorCode::ReducibleInput, "polynomial has a repeated factor in its leader");
}

TwoPolynomials two_polynomials(const DiffPoly& p_i, const DiffPoly& q, int index) {
  check_irreducibility_hints(p_i, index);
  const SeparantInitial si = separant_initial(p_i, index);
  const ReductionCertificate cert = partial_reduce(q, p_i, index);
  if (cert.remainder.is_zero() || exact_divide(cert.remainder, p_i))
    fail(ErrorCode::QInIdeal, "the inequation lies in the saturation ideal");
  const DerivVar leader_var{index, si.order};
  ResultantCertificate res = resultant_with_cofactors(p_i, si.separant * cert.remainder, leader_var);
  if (res.resultant.is_zero())
    fail(ErrorCode::ReducibleInput, "resultant vanishes, so the polynomial is not irreducible");
  return {p_i, res.resultant, cert.remainder, std::move(res)};
}

}  // namespace diffnorm
