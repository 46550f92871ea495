#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdeforge/circuit.hpp"
#include "pdeforge/mlpoly.hpp"

namespace pdeforge {

// Loopless ordered pairs (i,j), i != j, sorted by lex(i,j) = i + j*n, with
// the order-preserving bijection onto compact indices 0..2C(n,2)-1. The
// pair<->index mapping is exported so full-lex consumers interoperate.
class EdgeSpace {
public:
  explicit EdgeSpace(unsigned n);

  unsigned vertex_count() const { return n_; }
  unsigned edge_count() const { return static_cast<unsigned>(pairs_.size()); }
  std::pair<unsigned, unsigned> pair_of(unsigned index) const;
  unsigned index_of(unsigned i, unsigned j) const;  // rejects loops
  unsigned lex_value(unsigned index) const;         // i + j*n

private:
  unsigned n_;
  std::vector<std::pair<unsigned, unsigned>> pairs_;
  std::vector<int> index_;  // n*n lookup, -1 on the diagonal
};

// Directed loopless graph on n vertices as a bitset over compact edge
// indices.
struct GraphSet {
  unsigned n = 0;
  uint64_t edges = 0;

  unsigned edge_count() const { return static_cast<unsigned>(__builtin_popcountll(edges)); }
  friend bool operator==(const GraphSet&, const GraphSet&) = default;
};

using VertexPermutation = std::vector<unsigned>;

// Compact-index permutation induced by a vertex permutation.
std::vector<unsigned> induced_edge_permutation(const EdgeSpace& space,
                                               const VertexPermutation& lambda);

// Edge (i,j) -> (lambda(i), lambda(j)).
GraphSet act(const VertexPermutation& lambda, const GraphSet& s);

std::vector<VertexPermutation> all_permutations(unsigned n);
unsigned long permutation_lex_rank(const VertexPermutation& p);

std::vector<VertexPermutation> automorphisms(const GraphSet& s);  // n <= 8
std::vector<uint64_t> orbit(const GraphSet& s);                   // sorted bitmasks

// One representative per isomorphism class: the numerically least bitmask in
// each orbit, listed ascending. n <= 4 guaranteed, n = 5 best effort.
std::vector<uint64_t> iso_classes(unsigned n, std::optional<unsigned> max_size = {});

// Number of loopless directed-graph isomorphism classes via the cycle index
// of the induced pair action. n <= 10.
mpz_class polya_count(unsigned n);

MLPoly orbit_polynomial(const GraphSet& s);       // n <= 8
MLPoly sub_iso_polynomial(const GraphSet& s);     // n <= 4
MLPoly super_iso_polynomial(const GraphSet& s);   // n <= 4

// Per-class bookkeeping behind the sub/super listings: gamma (resp. Gamma)
// counts distinct sub- (super-)graphs of S in the class; incidence is
// orbit_size * multiplicity, the class's factor count in the orbit-list
// generating polynomial.
struct ClassIncidence {
  uint64_t rep = 0;
  unsigned edge_count = 0;
  unsigned long orbit_size = 0;
  unsigned long multiplicity = 0;
  unsigned long incidence() const { return orbit_size * multiplicity; }
};
std::vector<ClassIncidence> sub_iso_classes(const GraphSet& s);
std::vector<ClassIncidence> super_iso_classes(const GraphSet& s);

enum class IsoKind { Iso, Sub, Super };

// Coefficient extraction on the matching orbit polynomial, as a bit.
int iso_pde_evaluate(IsoKind kind, const GraphSet& s, const GraphSet& t, unsigned long m = 1);

// 0 when T is not isomorphic to S; otherwise sum_v 2^{n*v + sigma(v)} for
// the lexicographically least sigma with act(sigma, S) = T.
mpz_class np_certificate(const GraphSet& s, const GraphSet& t);  // n <= 8
VertexPermutation decode_certificate(const mpz_class& certificate, unsigned n);

struct Prop3Report {
  bool pass = false;
  unsigned nvars = 0;
  std::vector<unsigned> subset;
  std::vector<unsigned long> exponents;  // (N-t)! * t! for t = 0..|S|
  std::string detail;
};

// Literal orbit-list check: expands P_{subset}(O_Z), performs the Z->Y
// replacements in decreasing cardinality order, and compares against the
// closed-form generating polynomial. nvars! <= 24.
Prop3Report prop3_literal_verify(unsigned nvars, std::span<const unsigned> subset);

struct LegendreBound {
  unsigned long alpha_sum = 0;  // sum over primes of the exponent of p in n!
  unsigned long bound = 0;      // (1 + 2C(n,2)) * alpha_sum
  std::map<unsigned long, unsigned long> exponents;
};
LegendreBound legendre_lower_bound(unsigned n);

// Orbit-grouped coefficient constraints on a candidate rho x d circuit.
struct ConstraintSystem {
  IsoKind kind = IsoKind::Iso;
  GraphSet s;
  unsigned rho = 0, d = 0;

  struct Equation {
    uint64_t class_rep = 0;
    unsigned long orbit_size = 0;
    bool target_one = false;  // orbit-average = 1, otherwise orbit-sum = 0
  };
  std::vector<Equation> equations;
  unsigned long unknown_count = 0;  // rho * d * (1 + 2C(n,2))

  // Per-equation residuals on the reduced expansion of a numeric circuit.
  std::vector<double> evaluate(const NumericCircuit& c) const;
};
ConstraintSystem constraint_system(IsoKind kind, const GraphSet& s, unsigned rho, unsigned d);

struct ResolventFit {
  unsigned t = 0;
  bool fits = false;               // symmetric and univariate in ell
  std::vector<mpq_class> binom;    // fitted a_0..a_E when fits
};
struct ResolventReport {
  bool pass = false;
  unsigned coset_count = 0;        // |S_E / G_n|
  std::vector<ResolventFit> fits;
};

// Expands e_t over the coset symmetrization z and checks the reduction fits
// the binomial basis. n <= 3, t_max <= 3.
ResolventReport resolvent_check(const GraphSet& s, unsigned t_max);

}  // namespace pdeforge
