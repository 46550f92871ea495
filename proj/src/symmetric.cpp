#include "pdeforge/symmetric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace pdeforge {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Signed Stirling numbers of the first kind, rows 0..t.
std::vector<std::vector<mpz_class>> stirling_first(unsigned t) {
  std::vector<std::vector<mpz_class>> s(t + 1, std::vector<mpz_class>(t + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= t; ++i)
    for (unsigned k = 1; k <= i; ++k)
      s[i][k] = s[i - 1][k - 1] - mpz_class(static_cast<long>(i - 1)) * s[i - 1][k];
  return s;
}

}  // namespace

mpq_class binomial_coefficient(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpq_class(b);
}

std::vector<mpq_class> UnivariateInL::monomial_basis() const {
  const unsigned dmax = degree();
  auto stirling = stirling_first(dmax);
  std::vector<mpq_class> out(dmax + 1, mpq_class(0));
  for (unsigned t = 0; t < binom.size(); ++t) {
    if (sgn(binom[t]) == 0) continue;
    mpq_class inv_fact = mpq_class(1) / mpq_class(factorial(t));
    for (unsigned k = 0; k <= t; ++k)
      out[k] += binom[t] * mpq_class(stirling[t][k]) * inv_fact;
  }
  return out;
}

MLPoly UnivariateInL::to_mlpoly() const {
  MLPoly acc(nvars, kRationalRing);
  for (unsigned t = 0; t < binom.size(); ++t) {
    if (sgn(binom[t]) == 0) continue;
    acc = acc + elementary_symmetric(nvars, t).scaled(RingElem::rational(binom[t]));
  }
  return acc;
}

MLPoly UnivariateInL::to_mlpoly_via_powers() const {
  std::vector<mpq_class> mono = monomial_basis();
  MLPoly ell(nvars, kRationalRing);
  for (unsigned i = 0; i < nvars; ++i)
    ell.add_term(Monomial::single(i), RingElem::integer(1));
  MLPoly acc(nvars, kRationalRing);
  MLPoly power = MLPoly::one(nvars, kRationalRing);
  for (unsigned k = 0; k < mono.size(); ++k) {
    if (k > 0) power = power * ell;
    if (sgn(mono[k]) != 0) acc = acc + power.scaled(RingElem::rational(mono[k]));
  }
  return acc;
}

MLPoly elementary_symmetric(unsigned nvars, unsigned t, RingId ring) {
  if (t > nvars)
    throw_error(ErrorKind::Precondition,
                "elementary symmetric degree t = " + std::to_string(t) + " exceeds N = " +
                    std::to_string(nvars));
  MLPoly p(nvars, ring);
  // Lexicographic combination walk.
  std::vector<unsigned> idx(t);
  for (unsigned i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    Monomial m;
    for (unsigned i : idx) m.bits |= uint64_t{1} << i;
    p.add_term(m, RingElem::one(ring));
    if (t == 0) break;
    int pos = static_cast<int>(t) - 1;
    while (pos >= 0 && idx[pos] == nvars - t + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
  }
  return p;
}

std::vector<NewtonTerm> newton_e_from_p(unsigned t) {
  if (t == 0)
    throw_error(ErrorKind::Precondition, "newton_e_from_p needs t >= 1");
  std::vector<NewtonTerm> out;
  std::vector<unsigned> mult(t, 0);
  // Enumerate multiplicity vectors with sum i*m_i = t, i = 1..t.
  auto emit = [&]() {
    mpq_class coeff = (t % 2 == 0) ? 1 : -1;
    for (unsigned i = 1; i <= t; ++i) {
      unsigned mi = mult[i - 1];
      if (mi == 0) continue;
      // (-1)^{m_i} / (m_i! * i^{m_i})
      if (mi % 2 == 1) coeff = -coeff;
      mpz_class denom = factorial(mi);
      mpz_class ipow;
      mpz_ui_pow_ui(ipow.get_mpz_t(), i, mi);
      coeff /= mpq_class(denom * ipow);
    }
    out.push_back(NewtonTerm{mult, coeff});
  };
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned remaining) {
    if (i > t) {
      if (remaining == 0) emit();
      return;
    }
    for (unsigned mi = 0; mi * i <= remaining; ++mi) {
      mult[i - 1] = mi;
      rec(i + 1, remaining - mi * i);
    }
    mult[i - 1] = 0;
  };
  rec(1, t);
  return out;
}

UnivariateInL e_to_binomial(unsigned nvars, unsigned t) {
  if (t > nvars)
    throw_error(ErrorKind::Precondition, "t exceeds the variable count");
  UnivariateInL q;
  q.nvars = nvars;
  q.binom.assign(t + 1, mpq_class(0));
  q.binom[t] = 1;
  return q;
}

UnivariateInL cardinality_pdp(CardinalityKind kind, unsigned s, unsigned nvars) {
  if (s > nvars)
    throw_error(ErrorKind::Precondition, "threshold s = " + std::to_string(s) +
                                             " exceeds N = " + std::to_string(nvars));
  UnivariateInL q;
  q.nvars = nvars;
  switch (kind) {
    case CardinalityKind::LessEq:
      q.binom.assign(s + 1, mpq_class(1));
      break;
    case CardinalityKind::GreaterEq:
      q.binom.assign(nvars + 1, mpq_class(0));
      for (unsigned t = s; t <= nvars; ++t) q.binom[t] = 1;
      break;
    case CardinalityKind::Equal:
      q.binom.assign(s + 1, mpq_class(0));
      q.binom[s] = 1;
      break;
  }
  return q;
}

int pdp_evaluate_cardinality(const UnivariateInL& q, Monomial t) {
  unsigned k = t.degree();
  mpq_class a = k < q.binom.size() ? q.binom[k] : mpq_class(0);
  if (a == 0) return 0;
  if (a == 1) return 1;
  throw_error(ErrorKind::InvalidPde, "binomial coefficient a_" + std::to_string(k) + " = " +
                                         rational_to_string(a) + " is neither 0 nor 1");
}

RootsReport factor_roots(const UnivariateInL& q, double tol) {
  std::vector<mpq_class> mono = q.monomial_basis();
  while (mono.size() > 1 && sgn(mono.back()) == 0) mono.pop_back();
  RootsReport report;
  const size_t deg = mono.size() - 1;
  report.leading = mono.back().get_d();
  if (deg == 0) return report;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg),
                                                    static_cast<Eigen::Index>(deg));
  for (size_t i = 0; i + 1 < deg; ++i) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  for (size_t i = 0; i < deg; ++i) {
    mpq_class c = -mono[i] / mono.back();
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = c.get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success)
    throw_error(ErrorKind::NonConvergence, "companion-matrix eigenvalue solve failed");

  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    report.roots.push_back(solver.eigenvalues()(i));
  std::sort(report.roots.begin(), report.roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  // Residuals |q(root)| on the monic scaling.
  double scale = 0.0;
  for (const auto& c : mono) scale = std::max(scale, std::abs(c.get_d()));
  for (const auto& r : report.roots) {
    std::complex<double> v = 0.0;
    for (size_t k = mono.size(); k-- > 0;) v = v * r + mono[k].get_d();
    report.max_residual = std::max(report.max_residual, std::abs(v) / scale);
  }
  if (report.max_residual > tol)
    throw_error(ErrorKind::NonConvergence,
                "root residual " + std::to_string(report.max_residual) + " exceeds tolerance");
  return report;
}

}  // namespace pdeforge
