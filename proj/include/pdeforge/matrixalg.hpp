#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdeforge/mlpoly.hpp"

namespace pdeforge {

struct ExactMatrix {
  unsigned n = 0;
  std::vector<mpq_class> a;  // row-major

  ExactMatrix() = default;
  explicit ExactMatrix(unsigned n_) : n(n_), a(static_cast<size_t>(n_) * n_, mpq_class(0)) {}
  static ExactMatrix identity(unsigned n);

  mpq_class& at(unsigned i, unsigned j) { return a[static_cast<size_t>(i) * n + j]; }
  const mpq_class& at(unsigned i, unsigned j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// 0/1 matrix as a flat byte vector, row-major.
using BitMatrix = std::vector<uint8_t>;

enum class GrassmannMode { Literal, Exterior };

// Literal ladder matrix Theta_j = Z^{tensor j} (x) a (x) I^{tensor (n-1-j)}
// with Z = diag(1,-1) and a = [[0,0],[1,0]]; entries in {-1,0,1}, dense
// 2^n x 2^n. n <= 6.
std::vector<int> grassmann_theta(unsigned j, unsigned n);

// Checks Theta_i Theta_j + Theta_j Theta_i = 0 and Theta_i^2 = 0 entrywise
// on the literal matrices; throws on violation. n <= 6.
void grassmann_verify_literal(unsigned n);

// Entry [2^n - 1, 0] of prod_i (sum_j A[i,j] Theta_j), factors multiplied in
// increasing row order; equals det(A). Literal mode n <= 6, exterior n <= 16.
mpq_class det_grassmann(const ExactMatrix& a, GrassmannMode mode = GrassmannMode::Exterior);

// det(A) = prod_i A[i,0] * prod_{i<j} (t_j - t_i) with the substitutions
// t_i^j -> A[i,j] / A[i,0] applied in strictly decreasing j. Requires a
// nonzero first column.
mpq_class det_vandermonde(const ExactMatrix& a);

// Coefficient of y_0..y_{n-1} in prod_i (sum_j A[i,j] y_j) with y_j^2 = 0:
// subset dynamic programming over the commuting nilpotents. n <= 12.
mpq_class permanent(const ExactMatrix& a);

// sum_i x_{ii} * det((diag(row sums) - X)[minor i]) in the n^2 entry
// variables x_{n*i+j}; multilinear with one factor per matrix row. n <= 6.
MLPoly p_tree_symbolic(unsigned n);

// Same polynomial evaluated at a rational matrix. n <= 10.
mpq_class p_tree_value(const ExactMatrix& a);

// Coefficient of prod A[i,j]^{M[i,j]} in the tree polynomial, as a bit.
// n <= 6.
int f_tree(const BitMatrix& m, unsigned n);

// Coefficient of prod A[i,j]^{M[i,j]} in the permanent polynomial, extracted
// by an alternating sum of sub-permanents. n <= 10.
int f_cycles(const BitMatrix& m, unsigned n);

// Indicator polynomial of ordered bases of GF(2)^n: one monomial per basis
// (v_0..v_{n-1}), variable x[n*i+j] carrying bit i of column v_j.
// prod_k (2^n - 2^k) terms. n <= 3.
MLPoly p_det_poly(unsigned n);

// Coefficient extraction on p_det_poly for the n^2-bit set t, as a bit;
// equals GF(2) invertibility of the encoded matrix. n <= 3.
int f_det_gf2(unsigned n, uint64_t t);

struct RootsCheckReport {
  bool pass = true;
  unsigned d = 0;
  double max_root_abs = 0.0;      // max |f(k)| over k = 1..d-1
  double min_offgrid_abs = 0.0;   // min |f| over grid points away from integers
  std::vector<std::string> failures;
};

// Evaluates f(x) = (exp(2 pi i x) - 1) / (exp(2 pi i x / d) - 1) on the
// reals, with removable singularities at multiples of d evaluated by the
// limit value d. Asserts that the integer points 1..d-1 are roots and that
// the function stays bounded away from zero off the integers.
RootsCheckReport integer_roots_check(unsigned d, double tol = 1e-9, double grid_step = 0.01);

}  // namespace pdeforge
