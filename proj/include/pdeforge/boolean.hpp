#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pdeforge/circuit.hpp"
#include "pdeforge/mlpoly.hpp"

namespace pdeforge {

// Boolean function on N inputs as a 2^N bit vector. Bit order is
// little-endian in the variable index: index b = sum_i b_i * 2^i.
class TruthTable {
public:
  TruthTable(unsigned nvars, std::vector<bool> bits);
  static TruthTable from_bit_string(unsigned nvars, const std::string& bits);
  static TruthTable constant(unsigned nvars, bool value);

  unsigned nvars() const { return nvars_; }
  size_t size() const { return bits_.size(); }
  bool bit(size_t index) const { return bits_[index]; }
  bool value(Monomial t) const { return bits_[t.bits]; }
  void set(size_t index, bool v) { bits_[index] = v; }

  bool operator==(const TruthTable& rhs) const = default;

private:
  unsigned nvars_;
  std::vector<bool> bits_;
};

// De Morgan formula AST: variables, constants, NOT, and binary AND/OR.
struct Formula {
  enum class Op { Var, Const, Not, And, Or };

  Op op = Op::Const;
  unsigned var = 0;
  bool value = false;
  std::shared_ptr<const Formula> left, right;

  using Ptr = std::shared_ptr<const Formula>;
  static Ptr make_var(unsigned i);
  static Ptr make_const(bool v);
  static Ptr make_not(Ptr child);
  static Ptr make_and(Ptr l, Ptr r);
  static Ptr make_or(Ptr l, Ptr r);

  // De Morgan formula size = leaf count.
  size_t leaf_count() const;
};

// Formula semantics on a 0/1 assignment (the definition, used both by the
// encoder's callers and as the comparison side of round-trip checks).
bool eval_formula(const Formula& f, Monomial assignment);

TruthTable formula_truth_table(const Formula& f, unsigned nvars);

// Boole's correspondence: not x -> 1-x, x or y -> x+y-xy, x and y -> xy,
// built bottom-up over Q with reduced multiplication.
MLPoly boole_encode(const Formula& f, unsigned nvars);

// Polynomial specifying the PDE for t: every accepted assignment b
// contributes the monomial on its support, so the coefficient of monomial T
// is exactly t(T). Ring must be Q or GF(2).
MLPoly interpolate_sumproduct(const TruthTable& t, RingId ring = kRationalRing);

// Same polynomial reconstructed through the integer-binary-encoding Lagrange
// product: interpolates the hypercube evaluations of the PDE polynomial
// (the mod-2 subset sums of t) on nodes sum_j x_j 2^j, expands with
// reduction, and maps the integral coefficients into GF(2). N <= 4.
MLPoly interpolate_binary(const TruthTable& t);

// (coefficient of T in p)^m, which must be exactly ring 0 or ring 1.
int pde_evaluate(const MLPoly& p, Monomial t, unsigned long m);

// Same contract applied to the canonical representative of a circuit.
int pdp_evaluate(const SigmaPiSigma& q, Monomial t, unsigned long m);
// Numeric variant; coefficients within tol of 0/1 are accepted.
int pdp_evaluate(const NumericCircuit& q, Monomial t, unsigned long m, double tol = 1e-6);

struct VerifyReport {
  bool pass = true;
  std::vector<Monomial> mismatches;  // subsets where the PDE and table differ
};

// Exhaustive comparison over all 2^N subsets. N <= 16.
VerifyReport verify_pde(const MLPoly& p, const TruthTable& t, unsigned long m);
VerifyReport verify_pde(const SigmaPiSigma& q, const TruthTable& t, unsigned long m);

}  // namespace pdeforge
