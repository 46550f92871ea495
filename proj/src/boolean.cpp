#include "pdeforge/boolean.hpp"

#include <cmath>

namespace pdeforge {

namespace {

constexpr unsigned kVerifyGuard = 16;
constexpr unsigned kBinaryGuard = 4;

}  // namespace

TruthTable::TruthTable(unsigned nvars, std::vector<bool> bits)
    : nvars_(nvars), bits_(std::move(bits)) {
  if (nvars > 20)
    throw_error(ErrorKind::SizeGuard, "truth table over " + std::to_string(nvars) +
                                          " inputs exceeds the N <= 20 guard");
  if (bits_.size() != (size_t{1} << nvars))
    throw_error(ErrorKind::Precondition, "truth table length must be exactly 2^N");
}

TruthTable TruthTable::from_bit_string(unsigned nvars, const std::string& bits) {
  std::vector<bool> v;
  v.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw_error(ErrorKind::Parse, "truth table bits must be 0/1, got '" + std::string(1, ch) + "'");
    v.push_back(ch == '1');
  }
  return TruthTable(nvars, std::move(v));
}

TruthTable TruthTable::constant(unsigned nvars, bool value) {
  return TruthTable(nvars, std::vector<bool>(size_t{1} << nvars, value));
}

Formula::Ptr Formula::make_var(unsigned i) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Var;
  f->var = i;
  return f;
}

Formula::Ptr Formula::make_const(bool v) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Const;
  f->value = v;
  return f;
}

Formula::Ptr Formula::make_not(Ptr child) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Not;
  f->left = std::move(child);
  return f;
}

Formula::Ptr Formula::make_and(Ptr l, Ptr r) {
  auto f = std::make_shared<Formula>();
  f->op = Op::And;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

Formula::Ptr Formula::make_or(Ptr l, Ptr r) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Or;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

size_t Formula::leaf_count() const {
  switch (op) {
    case Op::Var:
    case Op::Const: return 1;
    case Op::Not: return left->leaf_count();
    case Op::And:
    case Op::Or: return left->leaf_count() + right->leaf_count();
  }
  return 0;
}

bool eval_formula(const Formula& f, Monomial assignment) {
  switch (f.op) {
    case Formula::Op::Var: return assignment.contains(f.var);
    case Formula::Op::Const: return f.value;
    case Formula::Op::Not: return !eval_formula(*f.left, assignment);
    case Formula::Op::And:
      return eval_formula(*f.left, assignment) && eval_formula(*f.right, assignment);
    case Formula::Op::Or:
      return eval_formula(*f.left, assignment) || eval_formula(*f.right, assignment);
  }
  return false;
}

TruthTable formula_truth_table(const Formula& f, unsigned nvars) {
  std::vector<bool> bits(size_t{1} << nvars);
  for (size_t b = 0; b < bits.size(); ++b) bits[b] = eval_formula(f, Monomial{b});
  return TruthTable(nvars, std::move(bits));
}

MLPoly boole_encode(const Formula& f, unsigned nvars) {
  switch (f.op) {
    case Formula::Op::Var:
      if (f.var >= nvars)
        throw_error(ErrorKind::Precondition,
                    "variable x" + std::to_string(f.var) + " out of range for N = " +
                        std::to_string(nvars));
      return MLPoly::variable(nvars, f.var, kRationalRing);
    case Formula::Op::Const:
      return MLPoly::constant(nvars, RingElem::integer(f.value ? 1 : 0));
    case Formula::Op::Not:
      return MLPoly::one(nvars, kRationalRing) - boole_encode(*f.left, nvars);
    case Formula::Op::And:
      return boole_encode(*f.left, nvars) * boole_encode(*f.right, nvars);
    case Formula::Op::Or: {
      MLPoly l = boole_encode(*f.left, nvars);
      MLPoly r = boole_encode(*f.right, nvars);
      return l + r - l * r;
    }
  }
  throw_error(ErrorKind::Internal, "bad formula node");
}

MLPoly interpolate_sumproduct(const TruthTable& t, RingId ring) {
  if (ring.tag == RingTag::Cyclotomic)
    throw_error(ErrorKind::Precondition, "interpolation ring must be Q or GF(2)");
  MLPoly p(t.nvars(), ring);
  for (size_t b = 0; b < t.size(); ++b)
    if (t.bit(b)) p.add_term(Monomial{b}, RingElem::one(ring));
  return p;
}

MLPoly interpolate_binary(const TruthTable& t) {
  const unsigned n = t.nvars();
  if (n > kBinaryGuard)
    throw_error(ErrorKind::SizeGuard,
                "binary-encoding interpolation costs Theta(4^N) term products; N <= " +
                    std::to_string(kBinaryGuard) + " required, got " + std::to_string(n));

  // Hypercube evaluations of the PDE polynomial over GF(2): subset sums of t.
  const size_t size = size_t{1} << n;
  std::vector<int> values(size, 0);
  for (size_t r = 0; r < size; ++r) {
    int acc = 0;
    // Iterate all submasks of r.
    size_t sub = r;
    while (true) {
      acc ^= t.bit(sub) ? 1 : 0;
      if (sub == 0) break;
      sub = (sub - 1) & r;
    }
    values[r] = acc;
  }

  // Integer encoding of a node equals its index: sum_j b_j 2^j.
  MLPoly sum(n, kRationalRing);
  for (size_t b = 0; b < size; ++b) {
    if (!values[b]) continue;
    MLPoly prod = MLPoly::one(n, kRationalRing);
    for (size_t dnode = 0; dnode < size; ++dnode) {
      if (dnode == b) continue;
      // (ell(x) - ell(d)) / (ell(b) - ell(d)), reduced as we go.
      MLPoly factor(n, kRationalRing);
      mpq_class denom(static_cast<long>(b) - static_cast<long>(dnode));
      factor.add_term(Monomial::empty(), RingElem::rational(mpq_class(-static_cast<long>(dnode)) / denom));
      for (unsigned j = 0; j < n; ++j)
        factor.add_term(Monomial::single(j), RingElem::rational(mpq_class(1L << j) / denom));
      prod = prod * factor;
    }
    sum = sum + prod;
  }

  MLPoly out(n, kGf2Ring);
  for (const auto& [m, c] : sum.terms()) {
    const mpq_class& q = c.rational_value();
    if (q.get_den() != 1)
      throw_error(ErrorKind::Internal, "binary interpolation produced a non-integral coefficient");
    mpz_class num = q.get_num();
    out.add_term(m, RingElem::gf2(mpz_odd_p(num.get_mpz_t()) ? 1 : 0));
  }
  return out;
}

namespace {

int bit_of_power(const RingElem& c, unsigned long m, Monomial t) {
  RingElem powered = c.pow(m);
  if (powered.is_zero()) return 0;
  if (powered.is_one()) return 1;
  std::string vars = "{";
  bool first = true;
  for (unsigned i : t.indices()) {
    if (!first) vars += ",";
    vars += std::to_string(i);
    first = false;
  }
  vars += "}";
  throw_error(ErrorKind::InvalidPde,
              "m-th power of the coefficient at T=" + vars + " is neither 0 nor 1: " + powered.str());
}

}  // namespace

int pde_evaluate(const MLPoly& p, Monomial t, unsigned long m) {
  return bit_of_power(p.coefficient(t), m, t);
}

int pdp_evaluate(const SigmaPiSigma& q, Monomial t, unsigned long m) {
  return pde_evaluate(q.expand(/*reduce=*/true), t, m);
}

int pdp_evaluate(const NumericCircuit& q, Monomial t, unsigned long m, double tol) {
  std::vector<double> coeffs = q.expand_reduced();
  if (t.bits >= coeffs.size())
    throw_error(ErrorKind::Precondition, "monomial does not fit the circuit's variables");
  double powered = std::pow(coeffs[t.bits], static_cast<double>(m));
  if (std::abs(powered) <= tol) return 0;
  if (std::abs(powered - 1.0) <= tol) return 1;
  throw_error(ErrorKind::InvalidPde, "numeric coefficient power " + std::to_string(powered) +
                                         " is neither 0 nor 1 within tolerance");
}

namespace {

VerifyReport verify_against(const MLPoly& p, const TruthTable& t, unsigned long m) {
  if (t.nvars() > kVerifyGuard)
    throw_error(ErrorKind::SizeGuard, "exhaustive verification bounded at N <= 16");
  if (p.nvars() != t.nvars())
    throw_error(ErrorKind::Precondition, "polynomial/table variable count mismatch");
  VerifyReport report;
  for (size_t b = 0; b < t.size(); ++b) {
    Monomial sub{b};
    int got = pde_evaluate(p, sub, m);
    if (got != (t.bit(b) ? 1 : 0)) {
      report.pass = false;
      report.mismatches.push_back(sub);
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_pde(const MLPoly& p, const TruthTable& t, unsigned long m) {
  return verify_against(p, t, m);
}

VerifyReport verify_pde(const SigmaPiSigma& q, const TruthTable& t, unsigned long m) {
  return verify_against(q.expand(/*reduce=*/true), t, m);
}

}  // namespace pdeforge
