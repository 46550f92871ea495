#include "pdeforge/circuit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace pdeforge {

SigmaPiSigma::SigmaPiSigma(unsigned rho, unsigned d, unsigned nvars, RingId ring)
    : rho_(rho), d_(d), nvars_(nvars), ring_(ring),
      entries_(static_cast<size_t>(rho) * d * (nvars + 1), RingElem::zero(ring)) {
  if (rho == 0 || d == 0)
    throw_error(ErrorKind::Precondition, "circuit shape must have rho >= 1 and d >= 1");
}

RingElem& SigmaPiSigma::at(unsigned u, unsigned v, unsigned w) {
  return entries_[(static_cast<size_t>(u) * d_ + v) * (nvars_ + 1) + w];
}

const RingElem& SigmaPiSigma::at(unsigned u, unsigned v, unsigned w) const {
  return entries_[(static_cast<size_t>(u) * d_ + v) * (nvars_ + 1) + w];
}

SigmaPiSigma SigmaPiSigma::subset_product(std::span<const unsigned> s, unsigned nvars,
                                          RingId ring) {
  for (unsigned i : s)
    if (i >= nvars)
      throw_error(ErrorKind::Precondition, "subset index out of range");
  if (s.empty()) {
    SigmaPiSigma c(1, 1, nvars, ring);
    c.at(0, 0, 0) = RingElem::one(ring);
    return c;
  }
  SigmaPiSigma c(1, static_cast<unsigned>(s.size()), nvars, ring);
  for (unsigned v = 0; v < s.size(); ++v) {
    c.at(0, v, 0) = RingElem::one(ring);
    c.at(0, v, 1 + s[v]) = RingElem::one(ring);
  }
  return c;
}

SigmaPiSigma SigmaPiSigma::superset_product(std::span<const unsigned> s, unsigned nvars,
                                            RingId ring) {
  for (unsigned i : s)
    if (i >= nvars)
      throw_error(ErrorKind::Precondition, "subset index out of range");
  if (nvars == 0) throw_error(ErrorKind::Precondition, "superset product needs N >= 1");
  Monomial mask = Monomial::of(s);
  SigmaPiSigma c(1, nvars, nvars, ring);
  for (unsigned v = 0; v < nvars; ++v) {
    if (!mask.contains(v)) c.at(0, v, 0) = RingElem::one(ring);
    c.at(0, v, 1 + v) = RingElem::one(ring);
  }
  return c;
}

SigmaPiSigma SigmaPiSigma::trivial_circuit(const MLPoly& p) {
  if (p.is_zero())
    throw_error(ErrorKind::Precondition, "trivial circuit of the zero polynomial is undefined");
  unsigned d = std::max(1u, p.degree());
  SigmaPiSigma c(static_cast<unsigned>(p.term_count()), d, p.nvars(), p.ring());
  unsigned u = 0;
  for (const auto& [m, coeff] : p.terms()) {
    auto vars = m.indices();
    for (unsigned v = 0; v < d; ++v) {
      // The term coefficient rides on the first factor.
      RingElem val = v == 0 ? coeff : RingElem::one(p.ring());
      if (v < vars.size()) c.at(u, v, 1 + vars[v]) = val;
      else c.at(u, v, 0) = val;
    }
    ++u;
  }
  return c;
}

SizeReport SigmaPiSigma::size_report() const {
  SizeReport r;
  r.rho = rho_;
  r.d = d_;
  r.width = nvars_ + 1;
  r.product = static_cast<unsigned long>(rho_) * d_ * (nvars_ + 1);
  return r;
}

MLPoly SigmaPiSigma::expand(bool reduce) const {
  if (reduce) {
    MLPoly acc(nvars_, ring_);
    for (unsigned u = 0; u < rho_; ++u) {
      MLPoly prod = MLPoly::one(nvars_, ring_);
      for (unsigned v = 0; v < d_; ++v) {
        MLPoly form(nvars_, ring_);
        form.add_term(Monomial::empty(), at(u, v, 0));
        for (unsigned w = 0; w < nvars_; ++w)
          form.add_term(Monomial::single(w), at(u, v, 1 + w));
        prod = prod * form;
      }
      acc = acc + prod;
    }
    return acc;
  }
  GeneralPoly raw = expand_raw();
  for (const auto& [e, c] : raw.terms())
    for (uint32_t x : e)
      if (x > 1)
        throw_error(ErrorKind::Precondition,
                    "raw expansion is non-multilinear; expand with reduce=true or use expand_raw");
  return raw.reduce_multilinear();
}

GeneralPoly SigmaPiSigma::expand_raw() const {
  GeneralPoly acc(nvars_, ring_, std::max(1u, d_));
  for (unsigned u = 0; u < rho_; ++u) {
    GeneralPoly prod = GeneralPoly::constant(nvars_, RingElem::one(ring_), std::max(1u, d_));
    for (unsigned v = 0; v < d_; ++v) {
      GeneralPoly form(nvars_, ring_, std::max(1u, d_));
      form.add_term(GeneralPoly::Exponents(nvars_, 0), at(u, v, 0));
      for (unsigned w = 0; w < nvars_; ++w) {
        GeneralPoly::Exponents e(nvars_, 0);
        e[w] = 1;
        form.add_term(std::move(e), at(u, v, 1 + w));
      }
      prod = prod * form;
    }
    acc = acc + prod;
  }
  return acc;
}

NumericCircuit NumericCircuit::from_exact(const SigmaPiSigma& c) {
  NumericCircuit out(c.rho(), c.d(), c.nvars());
  for (unsigned u = 0; u < c.rho(); ++u)
    for (unsigned v = 0; v < c.d(); ++v)
      for (unsigned w = 0; w <= c.nvars(); ++w) out.at(u, v, w) = c.at(u, v, w).to_double();
  return out;
}

namespace {

constexpr unsigned kNumericExpandGuard = 16;

void check_numeric_size(unsigned nvars) {
  if (nvars > kNumericExpandGuard)
    throw_error(ErrorKind::SizeGuard, "numeric expansion over " + std::to_string(nvars) +
                                          " variables exceeds the 2^16-coefficient guard");
}

// coeffs *= (a0 + sum_w a_w x_w) under OR-multiplication.
void mul_linear_form_inplace(std::vector<double>& coeffs, unsigned nvars, const double* form) {
  const size_t size = coeffs.size();
  std::vector<double> next(size, 0.0);
  for (size_t t = 0; t < size; ++t) {
    double c = coeffs[t];
    if (c == 0.0) continue;
    next[t] += c * form[0];
    for (unsigned w = 0; w < nvars; ++w) {
      double a = form[1 + w];
      if (a == 0.0) continue;
      next[t | (size_t{1} << w)] += c * a;
    }
  }
  coeffs.swap(next);
}

}  // namespace

std::vector<double> NumericCircuit::expand_reduced() const {
  check_numeric_size(nvars);
  std::vector<double> acc(size_t{1} << nvars, 0.0);
  for (unsigned u = 0; u < rho; ++u) {
    std::vector<double> prod(size_t{1} << nvars, 0.0);
    prod[0] = 1.0;
    for (unsigned v = 0; v < d; ++v)
      mul_linear_form_inplace(prod, nvars, &entries[(static_cast<size_t>(u) * d + v) * (nvars + 1)]);
    for (size_t t = 0; t < acc.size(); ++t) acc[t] += prod[t];
  }
  return acc;
}

std::vector<double> expand_reduced_enumerative(const NumericCircuit& c) {
  check_numeric_size(c.nvars);
  std::vector<double> acc(size_t{1} << c.nvars, 0.0);
  // One choice of slot (constant or variable) per factor.
  std::vector<unsigned> choice(c.d, 0);
  for (unsigned u = 0; u < c.rho; ++u) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      double coeff = 1.0;
      uint64_t mono = 0;
      for (unsigned v = 0; v < c.d; ++v) {
        unsigned w = choice[v];
        coeff *= c.at(u, v, w);
        if (w > 0) mono |= uint64_t{1} << (w - 1);
      }
      if (coeff != 0.0) acc[mono] += coeff;
      unsigned v = 0;
      while (v < c.d && choice[v] == c.nvars) {
        choice[v] = 0;
        ++v;
      }
      if (v == c.d) break;
      ++choice[v];
    }
  }
  return acc;
}

namespace {

struct UnknownIndex {
  unsigned u, v, w;
};

double max_abs_residual(const std::vector<double>& got, const std::vector<double>& want) {
  double m = 0.0;
  for (size_t i = 0; i < got.size(); ++i) m = std::max(m, std::abs(got[i] - want[i]));
  return m;
}

// Jacobian column for unknown (u,v,w): (prod of the other factors of summand
// u), OR-shifted by x_w when w > 0.
void jacobian_column(const NumericCircuit& c, const UnknownIndex& idx,
                     const std::vector<double>& partial, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  if (idx.w == 0) {
    out = partial;
    return;
  }
  unsigned var = idx.w - 1;
  for (size_t t = 0; t < partial.size(); ++t) {
    if (partial[t] == 0.0) continue;
    out[t | (size_t{1} << var)] += partial[t];
  }
}

}  // namespace

PdpSearchResult pdp_search(const MLPoly& target, unsigned rho, unsigned d,
                           const PdpSearchOptions& opts) {
  if (target.ring() != kRationalRing)
    throw_error(ErrorKind::Precondition, "pdp_search target must be over Q");
  const unsigned n = target.nvars();
  check_numeric_size(n);
  if (rho == 0 || d == 0)
    throw_error(ErrorKind::Precondition, "pdp_search needs rho >= 1 and d >= 1");

  std::vector<double> want(size_t{1} << n, 0.0);
  for (const auto& [m, c] : target.terms()) want[m.bits] = c.to_double();

  std::vector<bool> fixed_mask(static_cast<size_t>(rho) * d * (n + 1), false);
  NumericCircuit fixed_values(rho, d, n);
  for (const auto& f : opts.fixed) {
    if (f.u >= rho || f.v >= d || f.w > n)
      throw_error(ErrorKind::Precondition, "fixed entry index out of range");
    fixed_mask[(static_cast<size_t>(f.u) * d + f.v) * (n + 1) + f.w] = true;
    fixed_values.at(f.u, f.v, f.w) = f.value;
  }

  std::vector<UnknownIndex> unknowns;
  for (unsigned u = 0; u < rho; ++u)
    for (unsigned v = 0; v < d; ++v)
      for (unsigned w = 0; w <= n; ++w)
        if (!fixed_mask[(static_cast<size_t>(u) * d + v) * (n + 1) + w])
          unknowns.push_back({u, v, w});

  const size_t ncoeff = size_t{1} << n;
  const size_t nunk = unknowns.size();

  PdpSearchResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (unsigned s = 0; s < std::max(1u, opts.seeds); ++s) {
    unsigned long run_seed = opts.seed * 1000003UL + s;
    std::mt19937_64 rng(run_seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    NumericCircuit c = fixed_values;
    for (const auto& idx : unknowns) c.at(idx.u, idx.v, idx.w) = uni(rng);

    std::vector<double> trace;
    double lambda = 1e-3;
    std::vector<double> coeffs = c.expand_reduced();
    double res = max_abs_residual(coeffs, want);
    trace.push_back(res);

    Eigen::MatrixXd jac(static_cast<Eigen::Index>(ncoeff), static_cast<Eigen::Index>(nunk));
    Eigen::VectorXd rvec(static_cast<Eigen::Index>(ncoeff));
    std::vector<double> partial(ncoeff), col(ncoeff);

    for (unsigned iter = 0; iter < opts.max_iterations && res > opts.tol; ++iter) {
      for (size_t t = 0; t < ncoeff; ++t)
        rvec(static_cast<Eigen::Index>(t)) = coeffs[t] - want[t];

      // Products of all factors but one, per (u,v); reused across w.
      for (size_t k = 0; k < nunk; ++k) {
        const auto& idx = unknowns[k];
        std::fill(partial.begin(), partial.end(), 0.0);
        partial[0] = 1.0;
        for (unsigned v = 0; v < d; ++v) {
          if (v == idx.v) continue;
          mul_linear_form_inplace(partial, n,
                                  &c.entries[(static_cast<size_t>(idx.u) * d + v) * (n + 1)]);
        }
        jacobian_column(c, idx, partial, col);
        for (size_t t = 0; t < ncoeff; ++t)
          jac(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(k)) = col[t];
      }

      Eigen::MatrixXd normal = jac.transpose() * jac;
      Eigen::VectorXd grad = jac.transpose() * rvec;

      bool stepped = false;
      for (unsigned attempt = 0; attempt < 12; ++attempt) {
        Eigen::MatrixXd damped = normal;
        for (size_t k = 0; k < nunk; ++k)
          damped(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) += lambda;
        Eigen::VectorXd delta = damped.ldlt().solve(-grad);

        NumericCircuit cand = c;
        for (size_t k = 0; k < nunk; ++k)
          cand.at(unknowns[k].u, unknowns[k].v, unknowns[k].w) +=
              delta(static_cast<Eigen::Index>(k));
        std::vector<double> cand_coeffs = cand.expand_reduced();
        double cand_res = max_abs_residual(cand_coeffs, want);
        if (cand_res < res) {
          c = std::move(cand);
          coeffs = std::move(cand_coeffs);
          res = cand_res;
          lambda = std::max(lambda * 0.3, 1e-12);
          stepped = true;
          break;
        }
        lambda *= 10.0;
      }
      trace.push_back(res);
      if (!stepped) break;  // stalled: residual can no longer improve
    }

    // Independent re-verification of the reported residual.
    double verified = max_abs_residual(expand_reduced_enumerative(c), want);
    if (verified < best.residual) {
      best.circuit = std::move(c);
      best.residual = verified;
      best.best_seed = run_seed;
      best.residual_trace = std::move(trace);
    }
    if (best.residual <= opts.tol) break;
  }

  best.converged = best.residual <= opts.tol;
  return best;
}

}  // namespace pdeforge
