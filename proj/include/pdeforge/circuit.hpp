#pragma once

#include <optional>
#include <vector>

#include "pdeforge/mlpoly.hpp"

namespace pdeforge {

struct SizeReport {
  unsigned rho = 0;
  unsigned d = 0;
  unsigned width = 0;  // 1 + N
  unsigned long product = 0;
};

// Sum of products of affine linear forms, underlain by the rho x d x (1+N)
// hypermatrix B: sum_u prod_v (B[u,v,0] + sum_w B[u,v,1+w] * x_w).
class SigmaPiSigma {
public:
  SigmaPiSigma(unsigned rho, unsigned d, unsigned nvars, RingId ring);

  // prod_{i in S} (1 + x_i); the empty S yields the constant-1 circuit.
  static SigmaPiSigma subset_product(std::span<const unsigned> s, unsigned nvars,
                                     RingId ring = kRationalRing);
  // (prod_{i in S} x_i) * prod_{i not in S} (1 + x_i); always d = N factors.
  static SigmaPiSigma superset_product(std::span<const unsigned> s, unsigned nvars,
                                       RingId ring = kRationalRing);
  // rho = term count, d = max degree, degree-deficient terms padded with
  // constant-1 factors. Rejects the zero polynomial.
  static SigmaPiSigma trivial_circuit(const MLPoly& p);

  unsigned rho() const { return rho_; }
  unsigned d() const { return d_; }
  unsigned nvars() const { return nvars_; }
  RingId ring() const { return ring_; }

  RingElem& at(unsigned u, unsigned v, unsigned w);
  const RingElem& at(unsigned u, unsigned v, unsigned w) const;

  SizeReport size_report() const;

  // reduce=true: full expansion with OR-multiplication (mod x_i^2 - x_i).
  // reduce=false: raw expansion; errors if any raw monomial is
  // non-multilinear (callers wanting the raw form use expand_raw).
  MLPoly expand(bool reduce) const;
  GeneralPoly expand_raw() const;

private:
  unsigned rho_, d_, nvars_;
  RingId ring_;
  std::vector<RingElem> entries_;  // [u][v][w] row-major, w in 0..nvars
};

// Double-precision circuit for the numeric PDP search. Kept apart from the
// exact type; no mixed arithmetic.
struct NumericCircuit {
  unsigned rho = 0, d = 0, nvars = 0;
  std::vector<double> entries;  // [u][v][w] row-major, w in 0..nvars

  NumericCircuit() = default;
  NumericCircuit(unsigned rho_, unsigned d_, unsigned nvars_)
      : rho(rho_), d(d_), nvars(nvars_),
        entries(static_cast<size_t>(rho_) * d_ * (nvars_ + 1), 0.0) {}

  double& at(unsigned u, unsigned v, unsigned w) {
    return entries[(static_cast<size_t>(u) * d + v) * (nvars + 1) + w];
  }
  double at(unsigned u, unsigned v, unsigned w) const {
    return entries[(static_cast<size_t>(u) * d + v) * (nvars + 1) + w];
  }

  static NumericCircuit from_exact(const SigmaPiSigma& c);

  // Reduced multilinear coefficient vector, indexed by monomial bitmask.
  std::vector<double> expand_reduced() const;
};

// Independent re-expansion used to double-check search results: enumerates
// one term per factor instead of the incremental dense pass.
std::vector<double> expand_reduced_enumerative(const NumericCircuit& c);

struct FixedEntry {
  unsigned u = 0, v = 0, w = 0;
  double value = 0.0;
};

struct PdpSearchOptions {
  unsigned seeds = 8;
  double tol = 1e-9;
  unsigned max_iterations = 400;
  unsigned long seed = 0;  // base seed; run s uses seed*1000003 + s
  std::vector<FixedEntry> fixed;
};

struct PdpSearchResult {
  NumericCircuit circuit;
  double residual = 0.0;           // max-abs coefficient residual, re-verified
  bool converged = false;          // residual <= tol
  unsigned long best_seed = 0;
  std::vector<double> residual_trace;  // best-so-far per iteration (best run)
};

// Damped least-squares fit of a rho x d x (1+N) circuit to the coefficients
// of an exact rational target, with multi-start. Non-convergence is reported
// in the result, not thrown.
PdpSearchResult pdp_search(const MLPoly& target, unsigned rho, unsigned d,
                           const PdpSearchOptions& opts = {});

}  // namespace pdeforge
