#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pdeforge/ring.hpp"

namespace pdeforge {

// Squarefree monomial over variables 0..63, one bit per variable.
//
// The per-variable exponent cap is what makes the bitset representation
// legal: multiplication modulo x_i^2 - x_i is bitwise OR.
struct Monomial {
  uint64_t bits = 0;

  static constexpr unsigned kMaxVars = 64;

  static Monomial empty() { return {}; }
  static Monomial single(unsigned i) { return Monomial{uint64_t{1} << i}; }
  static Monomial of(std::span<const unsigned> vars);

  bool contains(unsigned i) const { return (bits >> i) & 1; }
  unsigned degree() const { return static_cast<unsigned>(__builtin_popcountll(bits)); }
  Monomial operator|(Monomial rhs) const { return Monomial{bits | rhs.bits}; }
  bool subset_of(Monomial rhs) const { return (bits & ~rhs.bits) == 0; }
  friend bool operator==(Monomial, Monomial) = default;

  std::vector<unsigned> indices() const;
  std::string str() const;  // e.g. "x0*x2" or "1"
};

// (popcount, numeric) order: fixes serialization and test goldens.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.bits < b.bits;
  }
};

// Sparse multilinear polynomial modulo the relations x_i^2 = x_i.
class MLPoly {
public:
  using TermMap = std::map<Monomial, RingElem, MonomialOrder>;

  MLPoly() : MLPoly(0, kRationalRing) {}
  MLPoly(unsigned nvars, RingId ring);

  static MLPoly zero(unsigned nvars, RingId ring) { return MLPoly(nvars, ring); }
  static MLPoly constant(unsigned nvars, RingElem c);
  static MLPoly one(unsigned nvars, RingId ring) {
    return constant(nvars, RingElem::one(ring));
  }
  static MLPoly variable(unsigned nvars, unsigned i, RingId ring);

  unsigned nvars() const { return nvars_; }
  RingId ring() const { return ring_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  unsigned degree() const;

  // Merges like terms; drops the term if the coefficient cancels to zero.
  void add_term(Monomial mono, const RingElem& coeff);

  MLPoly operator+(const MLPoly& rhs) const;
  MLPoly operator-(const MLPoly& rhs) const;
  // Product with on-the-fly reduction: monomials combine by bitwise OR.
  MLPoly operator*(const MLPoly& rhs) const;
  MLPoly scaled(const RingElem& c) const;

  bool operator==(const MLPoly& rhs) const;

  // Coefficient of monomial T; equals prod_{i in T} d/dx_i applied to the
  // polynomial and evaluated at x = 0.
  RingElem coefficient(Monomial t) const;

  RingElem evaluate(std::span<const RingElem> point) const;

  // Coefficient of T multiplied by mu * prod_{i in T} u[i].
  MLPoly scale_vars(std::span<const RingElem> u, const RingElem& mu) const;

private:
  void check_same(const MLPoly& rhs) const;
  void check_fits(Monomial m) const;

  unsigned nvars_;
  RingId ring_;
  TermMap terms_;
};

inline RingElem diff_extract(const MLPoly& p, Monomial t) { return p.coefficient(t); }

// Dense-exponent staging type for pre-reduction interpolants and the Newton
// identity checks. Only ever used on tiny inputs.
class GeneralPoly {
public:
  using Exponents = std::vector<uint32_t>;

  GeneralPoly(unsigned nvars, RingId ring, uint32_t exponent_cap = 64);

  unsigned nvars() const { return nvars_; }
  RingId ring() const { return ring_; }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, RingElem>& terms() const { return terms_; }

  static GeneralPoly constant(unsigned nvars, RingElem c, uint32_t cap = 64);
  static GeneralPoly monomial(unsigned nvars, const Exponents& e, RingElem c,
                              uint32_t cap = 64);
  static GeneralPoly from_mlpoly(const MLPoly& p, uint32_t cap = 64);

  void add_term(Exponents e, const RingElem& coeff);
  GeneralPoly operator+(const GeneralPoly& rhs) const;
  GeneralPoly operator*(const GeneralPoly& rhs) const;
  GeneralPoly scaled(const RingElem& c) const;
  GeneralPoly pow(unsigned e) const;
  bool operator==(const GeneralPoly& rhs) const;

  RingElem evaluate(std::span<const RingElem> point) const;

  // Clamps every exponent >= 1 to 1 and merges like terms.
  MLPoly reduce_multilinear() const;

private:
  unsigned nvars_;
  RingId ring_;
  uint32_t cap_;
  std::map<Exponents, RingElem> terms_;
};

}  // namespace pdeforge
