#pragma once

#include <complex>
#include <vector>

#include "pdeforge/mlpoly.hpp"

namespace pdeforge {

// Univariate polynomial in the linear functional ell = sum_i x_i, stored in
// the binomial basis: q = sum_t binom[t] * C(ell, t).
//
// The binomial basis is the canonical form here: the reduced multilinear
// representative of C(ell, t) is e_t, so the coefficient of any size-t
// monomial equals binom[t] and evaluation on subsets is O(1).
struct UnivariateInL {
  unsigned nvars = 0;
  std::vector<mpq_class> binom;  // a_0 .. a_D, D <= nvars

  unsigned degree() const { return binom.empty() ? 0 : static_cast<unsigned>(binom.size() - 1); }

  // Coefficients of ell^0 .. ell^D (basis change via Stirling numbers).
  std::vector<mpq_class> monomial_basis() const;

  // Canonical multilinear representative: sum_t a_t * e_t.
  MLPoly to_mlpoly() const;
  // Same polynomial reached through the monomial basis: expand sum_k c_k
  // ell^k with reduced multiplication. Second route for consistency checks.
  MLPoly to_mlpoly_via_powers() const;
};

// e_t(x) = sum over size-t subsets of the monomial product.
MLPoly elementary_symmetric(unsigned nvars, unsigned t, RingId ring = kRationalRing);

// One summand of Newton's identity for e_t: the partition with multiplicity
// vector m_1..m_t (sum i*m_i = t) and its rational coefficient.
struct NewtonTerm {
  std::vector<unsigned> multiplicities;  // index i-1 holds m_i
  mpq_class coeff;
};

// e_t = (-1)^t sum over partitions of prod (-p_i)^{m_i} / (m_i! i^{m_i}),
// returned term by term.
std::vector<NewtonTerm> newton_e_from_p(unsigned t);

// The reduced form of e_t is exactly C(ell, t).
UnivariateInL e_to_binomial(unsigned nvars, unsigned t);

enum class CardinalityKind { LessEq, GreaterEq, Equal };

// Binomial-basis PDPs for the threshold functions on |T|.
UnivariateInL cardinality_pdp(CardinalityKind kind, unsigned s, unsigned nvars);

// a_{|T|} read as a bit; anything other than 0/1 is an invalid PDP.
int pdp_evaluate_cardinality(const UnivariateInL& q, Monomial t);

struct RootsReport {
  std::vector<std::complex<double>> roots;  // sorted by (re, im)
  double leading = 0.0;                     // coefficient of ell^D
  double max_residual = 0.0;                // max |q(root)| after scaling
};

// Numeric roots of the monomial-basis form via companion-matrix
// eigenvalues. The negated roots are the paper-style product offsets.
RootsReport factor_roots(const UnivariateInL& q, double tol = 1e-9);

mpq_class binomial_coefficient(unsigned long n, unsigned long k);

}  // namespace pdeforge
