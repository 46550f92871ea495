#pragma once

// Reference implementations used by the self-test suite and the unit tests.
// Everything here is a separate computation route from the production
// operations it checks: plain enumeration, cofactor recursion, Gaussian
// elimination, alternating sums. Production code never calls into this
// header.

#include "pdeforge/boolean.hpp"
#include "pdeforge/matrixalg.hpp"
#include "pdeforge/orbits.hpp"
#include "pdeforge/symmetric.hpp"

namespace pdeforge::oracles {

mpq_class det_cofactor(const ExactMatrix& a);

// sum over sigma of prod_i A[i, sigma(i)], by direct n! enumeration.
mpq_class permanent_enumeration(const ExactMatrix& a);

// Coefficient of T via the alternating subset sum of evaluations
// sum_{R subset T} (-1)^{|T|-|R|} p(1_R); independent of the sparse map.
mpq_class mobius_coefficient(const MLPoly& p, Monomial t);

bool functional_tree(const BitMatrix& m, unsigned n);
bool permutation_matrix(const BitMatrix& m, unsigned n);

// Rank over GF(2) by Gaussian elimination; t encodes the matrix bits
// row-major as in f_det_gf2.
unsigned gf2_rank(unsigned n, uint64_t t);

bool iso_relation(const GraphSet& s, const GraphSet& t);        // exists lambda: lambda T = S
bool sub_iso_relation(const GraphSet& s, const GraphSet& t);    // T maps into S
bool super_iso_relation(const GraphSet& s, const GraphSet& t);  // some copy of S inside T

TruthTable threshold_table(CardinalityKind kind, unsigned s, unsigned nvars);

// Prime exponents of n! obtained by trial-dividing the integer itself.
std::map<unsigned long, unsigned long> factor_factorial(unsigned n);

}  // namespace pdeforge::oracles
